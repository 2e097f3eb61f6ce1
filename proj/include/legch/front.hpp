#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "legch/error.hpp"

namespace legch {

// Generator of the Chekanov algebra. Crossings are numbered first, in event
// order; right cusps follow, from the top of the diagram down.
using Gen = int;

struct Event {
  enum class Kind { LeftCusp, Crossing };

  Kind kind = Kind::Crossing;
  // 1-based strand position counted from the top. A left cusp inserts two new
  // strands at pos and pos+1; a crossing swaps the strands at pos and pos+1.
  int pos = 1;

  static Event left_cusp(int pos) { return {Kind::LeftCusp, pos}; }
  static Event crossing(int pos) { return {Kind::Crossing, pos}; }

  bool is_cusp() const { return kind == Kind::LeftCusp; }
  bool is_crossing() const { return kind == Kind::Crossing; }

  friend bool operator==(const Event&, const Event&) = default;
};

struct CrossingInfo {
  std::size_t event = 0;
  int pos = 0;
  // Strand entering the crossing from above (the smaller-slope strand).
  int upper_arc = 0;
  int lower_arc = 0;
};

struct RightCuspInfo {
  int upper_arc = 0;
  int lower_arc = 0;
};

// Combinatorial layout of a plat front. Spanning arcs are numbered by left
// cusp: cusp k owns arcs 2k (upper) and 2k+1 (lower). Slab s is the vertical
// strip between event s-1 and event s; slab 0 is empty and the last slab ends
// at the right cusps.
struct FrontLayout {
  int arc_count = 0;
  std::vector<std::size_t> left_cusp_event;
  std::vector<CrossingInfo> crossings;
  std::vector<RightCuspInfo> right_cusps;
  std::vector<int> right_cusp_of_arc;
  std::vector<int> crossing_of_event;  // -1 for left cusps
  std::vector<std::vector<int>> slab_arcs;

  std::size_t slab_count() const { return slab_arcs.size(); }
  int strands_in_slab(std::size_t s) const {
    return static_cast<int>(slab_arcs[s].size());
  }
};

// A validated simple front in plat form: left cusps anywhere, all right cusps
// at a common terminal x-coordinate joining positions (1,2), (3,4), ...
class FrontDiagram {
 public:
  explicit FrontDiagram(std::vector<Event> events, std::string name = {});

  // Plat closure of a braid word on `strands` strands.
  static FrontDiagram plat(int strands, const std::vector<int>& word,
                           std::string name = {});

  const std::vector<Event>& events() const { return events_; }
  const std::string& name() const { return name_; }
  FrontDiagram renamed(std::string name) const;

  int strands() const { return layout_->strands_in_slab(layout_->slab_count() - 1); }
  int crossing_count() const { return static_cast<int>(layout_->crossings.size()); }
  int left_cusp_count() const { return static_cast<int>(layout_->left_cusp_event.size()); }
  int right_cusp_count() const { return static_cast<int>(layout_->right_cusps.size()); }
  int generator_count() const { return crossing_count() + right_cusp_count(); }

  const FrontLayout& layout() const { return *layout_; }

  friend bool operator==(const FrontDiagram& a, const FrontDiagram& b) {
    return a.events_ == b.events_ && a.name_ == b.name_;
  }

 private:
  std::vector<Event> events_;
  std::string name_;
  std::shared_ptr<const FrontLayout> layout_;
};

// Accepts "plat 2m : i1 i2 ..." or "front : L p X i ...", with '#' comments.
// A comment line of the form "# name: LABEL" sets the diagram name.
FrontDiagram parse_front(std::string_view text);

// Extended form; parse_front(serialize_front(F)) == F.
std::string serialize_front(const FrontDiagram& front);

struct ClassicalInvariants {
  int tb = 0;
  int r = 0;
  int writhe = 0;
  int cusps = 0;
  int up_cusps = 0;
  int down_cusps = 0;
};

// Orientation: start at the first left cusp heading right along its upper arc.
ClassicalInvariants classical_invariants(const FrontDiagram& front);

// Crossing signs under the canonical orientation (+1 / -1), in crossing order.
std::vector<int> crossing_signs(const FrontDiagram& front);

class GradedAlphabet {
 public:
  GradedAlphabet(int crossings, int cusps, std::vector<int> degrees,
                 std::vector<int> mu);

  int size() const { return crossings_ + cusps_; }
  int crossing_count() const { return crossings_; }
  int cusp_count() const { return cusps_; }
  bool is_crossing(Gen g) const { return g >= 0 && g < crossings_; }
  bool is_cusp(Gen g) const { return g >= crossings_ && g < size(); }
  Gen cusp(int index) const { return crossings_ + index; }

  int degree(Gen g) const { return degrees_.at(static_cast<std::size_t>(g)); }
  const std::vector<int>& degrees() const { return degrees_; }
  // Maslov potential per spanning arc, normalized to minimum 0.
  const std::vector<int>& mu() const { return mu_; }

  std::vector<Gen> of_degree(int k) const;
  // Degree-zero crossings in diagram order (the augmentation variables).
  std::vector<Gen> degree_zero() const { return of_degree(0); }
  std::map<int, int> counts() const;
  int min_degree() const;
  int max_degree() const;

  std::string name(Gen g) const { return "c" + std::to_string(g + 1); }

 private:
  int crossings_;
  int cusps_;
  std::vector<int> degrees_;
  std::vector<int> mu_;
};

// Throws Error(RotationNonzero) when r != 0: no integer potential exists.
GradedAlphabet maslov_and_grading(const FrontDiagram& front);

}  // namespace legch
