#include "legch/dga.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace legch {

int word_degree(const GradedAlphabet& alphabet, const Word& w) {
  int d = 0;
  for (Gen g : w) d += alphabet.degree(g);
  return d;
}

Chain::Chain(std::initializer_list<Word> words) {
  for (const Word& w : words) toggle(w);
}

void Chain::toggle(const Word& w) {
  auto [it, inserted] = words_.insert(w);
  if (!inserted) words_.erase(it);
}

Chain& Chain::operator+=(const Chain& other) {
  for (const Word& w : other.words_) toggle(w);
  return *this;
}

Chain operator*(const Chain& a, const Chain& b) {
  Chain out;
  for (const Word& x : a) {
    for (const Word& y : b) {
      Word w = x;
      w.insert(w.end(), y.begin(), y.end());
      out.toggle(w);
    }
  }
  return out;
}

std::string format_word(const GradedAlphabet& alphabet, const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += alphabet.name(w[i]);
  }
  return out;
}

std::string format_chain(const GradedAlphabet& alphabet, const Chain& c) {
  if (c.empty()) return "0";
  std::string out;
  for (const Word& w : c) {
    if (!out.empty()) out += " + ";
    out += format_word(alphabet, w);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Sweep. A partial disk is a vertical interval [upper, lower] of strand
// positions carried across the events to the right of its starting cusp.

namespace {

enum class Move { Pass, UpperCorner, LowerCorner, Complete };

struct Step {
  Move move;
  int upper;
  int lower;
};

// Successor states of interval [u, l] across event ev.
void successors(const Event& ev, int u, int l, std::vector<Step>& out) {
  out.clear();
  if (ev.is_cusp()) {
    const int p = ev.pos;
    if (p <= u) {
      out.push_back({Move::Pass, u + 2, l + 2});
    } else if (p > l) {
      out.push_back({Move::Pass, u, l});
    } else {
      out.push_back({Move::Pass, u, l + 2});
    }
    return;
  }
  const int i = ev.pos;
  if (i == u && i + 1 == l) {
    out.push_back({Move::Complete, u, l});
  } else if (i + 1 < u || i > l || (u < i && i + 1 < l)) {
    out.push_back({Move::Pass, u, l});
  } else if (i + 1 == u) {
    out.push_back({Move::Pass, u - 1, l});
    out.push_back({Move::UpperCorner, u, l});
  } else if (i == l) {
    out.push_back({Move::Pass, u, l + 1});
    out.push_back({Move::LowerCorner, u, l});
  } else if (i == u) {
    out.push_back({Move::Pass, u + 1, l});
  } else {  // i + 1 == l
    out.push_back({Move::Pass, u, l - 1});
  }
}

// Region labelling of cells (slab, gap); gap g lies between strands g and g+1.
struct RegionMap {
  std::vector<std::vector<int>> id;
  int count = 0;
};

int uf_find(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

RegionMap build_regions(const FrontDiagram& front) {
  const FrontLayout& lay = front.layout();
  const auto& events = front.events();
  std::vector<std::vector<int>> cell(lay.slab_count());
  int cells = 0;
  for (std::size_t s = 0; s < lay.slab_count(); ++s) {
    cell[s].resize(static_cast<std::size_t>(lay.strands_in_slab(s) + 1));
    for (int& c : cell[s]) c = cells++;
  }
  std::vector<int> parent(static_cast<std::size_t>(cells));
  std::iota(parent.begin(), parent.end(), 0);
  auto join = [&](int a, int b) { parent[uf_find(parent, a)] = uf_find(parent, b); };

  for (std::size_t k = 0; k < events.size(); ++k) {
    const auto& left = cell[k];
    const auto& right = cell[k + 1];
    const int n = static_cast<int>(left.size()) - 1;
    const Event& ev = events[k];
    if (ev.is_crossing()) {
      for (int g = 0; g <= n; ++g) {
        if (g != ev.pos) join(left[g], right[g]);
      }
    } else {
      const int p = ev.pos;
      for (int g = 0; g <= n; ++g) {
        if (g < p - 1) join(left[g], right[g]);
        else if (g >= p) join(left[g], right[g + 2]);
      }
      join(left[p - 1], right[p - 1]);
      join(left[p - 1], right[p + 1]);
    }
  }
  const auto& last = cell.back();
  for (std::size_t g = 0; g < last.size(); g += 2) join(last[g], last[0]);

  RegionMap map;
  map.id.resize(cell.size());
  std::vector<int> label(static_cast<std::size_t>(cells), -1);
  // The unbounded region gets id 0.
  label[uf_find(parent, cell[0][0])] = map.count++;
  for (std::size_t s = 0; s < cell.size(); ++s) {
    for (int c : cell[s]) {
      int& l = label[uf_find(parent, c)];
      if (l < 0) l = map.count++;
      map.id[s].push_back(l);
    }
  }
  return map;
}

class DiskSweep {
 public:
  explicit DiskSweep(const FrontDiagram& front)
      : front_(front), lay_(front.layout()), regions_(build_regions(front)) {
    compute_viability();
  }

  std::vector<Disk> run() {
    const auto& events = front_.events();
    for (std::size_t k = 0; k < events.size(); ++k) {
      if (!events[k].is_cusp()) continue;
      start_ = k;
      const int p = events[k].pos;
      upper_.clear();
      lower_.clear();
      cells_.clear();
      extend(k + 1, p, p + 1);
    }
    return std::move(found_);
  }

 private:
  bool viable(std::size_t slab, int u, int l) const {
    const int n = lay_.strands_in_slab(slab);
    return viable_[slab][static_cast<std::size_t>(u * (n + 2) + l)] != 0;
  }

  // viable_[s][u][l]: a partial disk [u, l] in slab s can still close up.
  void compute_viability() {
    const auto& events = front_.events();
    const std::size_t slabs = lay_.slab_count();
    viable_.resize(slabs);
    for (std::size_t s = 0; s < slabs; ++s) {
      const int n = lay_.strands_in_slab(s);
      viable_[s].assign(static_cast<std::size_t>((n + 2) * (n + 2)), 0);
    }
    const std::size_t last = slabs - 1;
    const int n_last = lay_.strands_in_slab(last);
    for (int u = 1; u < n_last; u += 2) {
      viable_[last][static_cast<std::size_t>(u * (n_last + 2) + u + 1)] = 1;
    }
    std::vector<Step> steps;
    for (std::size_t s = last; s-- > 0;) {
      const int n = lay_.strands_in_slab(s);
      for (int u = 1; u <= n; ++u) {
        for (int l = u + 1; l <= n; ++l) {
          successors(events[s], u, l, steps);
          bool ok = false;
          for (const Step& st : steps) {
            if (st.move == Move::Complete || viable(s + 1, st.upper, st.lower)) {
              ok = true;
              break;
            }
          }
          viable_[s][static_cast<std::size_t>(u * (n + 2) + l)] = ok ? 1 : 0;
        }
      }
    }
  }

  void record(Gen target) {
    Disk d;
    d.target = target;
    d.corners.assign(upper_.rbegin(), upper_.rend());
    d.corners.insert(d.corners.end(), lower_.begin(), lower_.end());
    std::set<int> regs;
    for (const auto& [slab, u, l] : cells_) {
      for (int g = u; g < l; ++g) regs.insert(regions_.id[slab][static_cast<std::size_t>(g)]);
    }
    d.regions.assign(regs.begin(), regs.end());
    d.start_event = start_;
    found_.push_back(std::move(d));
  }

  // Interval [u, l] occupies slab `slab`; process event `slab` next.
  void extend(std::size_t slab, int u, int l) {
    if (!viable(slab, u, l)) return;
    cells_.push_back({slab, u, l});
    const auto& events = front_.events();
    if (slab == events.size()) {
      record(front_.crossing_count() + (u - 1) / 2);
      cells_.pop_back();
      return;
    }
    std::vector<Step> steps;
    successors(events[slab], u, l, steps);
    const Gen x = lay_.crossing_of_event[slab];
    for (const Step& st : steps) {
      switch (st.move) {
        case Move::Complete:
          record(x);
          break;
        case Move::Pass:
          extend(slab + 1, st.upper, st.lower);
          break;
        case Move::UpperCorner:
          upper_.push_back(x);
          extend(slab + 1, st.upper, st.lower);
          upper_.pop_back();
          break;
        case Move::LowerCorner:
          lower_.push_back(x);
          extend(slab + 1, st.upper, st.lower);
          lower_.pop_back();
          break;
      }
    }
    cells_.pop_back();
  }

  struct Cell {
    std::size_t slab;
    int u;
    int l;
  };

  const FrontDiagram& front_;
  const FrontLayout& lay_;
  RegionMap regions_;
  std::vector<std::vector<char>> viable_;
  std::size_t start_ = 0;
  std::vector<Gen> upper_;
  std::vector<Gen> lower_;
  std::vector<Cell> cells_;
  std::vector<Disk> found_;
};

}  // namespace

std::vector<Disk> enumerate_disks(const FrontDiagram& front) {
  return DiskSweep(front).run();
}

std::vector<Disk> admissible_disks(const FrontDiagram& front, Gen c) {
  std::vector<Disk> out;
  for (Disk& d : enumerate_disks(front)) {
    if (d.target == c) out.push_back(std::move(d));
  }
  return out;
}

int region_count(const FrontDiagram& front) { return build_regions(front).count; }

// ---------------------------------------------------------------------------

Chain Differential::apply(const Word& w) const {
  Chain out;
  for (std::size_t j = 0; j < w.size(); ++j) {
    for (const Word& image : (*this)[w[j]]) {
      Word t(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(j));
      t.insert(t.end(), image.begin(), image.end());
      t.insert(t.end(), w.begin() + static_cast<std::ptrdiff_t>(j) + 1, w.end());
      out.toggle(t);
    }
  }
  return out;
}

Chain Differential::apply(const Chain& c) const {
  Chain out;
  for (const Word& w : c) out += apply(w);
  return out;
}

Differential ungraded_differential(const FrontDiagram& front) {
  std::vector<Chain> images(static_cast<std::size_t>(front.generator_count()));
  for (Gen g = front.crossing_count(); g < front.generator_count(); ++g) {
    images[static_cast<std::size_t>(g)].toggle(Word{});
  }
  for (const Disk& d : enumerate_disks(front)) {
    images[static_cast<std::size_t>(d.target)].toggle(d.corners);
  }
  return Differential(std::move(images));
}

Differential differential(const FrontDiagram& front, const GradedAlphabet& alphabet) {
  Differential d = ungraded_differential(front);
  for (Gen g = 0; g < d.size(); ++g) {
    for (const Word& w : d[g]) {
      if (word_degree(alphabet, w) != alphabet.degree(g) - 1) {
        throw Error(ErrorKind::InternalInconsistency,
                    "word " + format_word(alphabet, w) + " in d(" + alphabet.name(g) +
                        ") has degree " + std::to_string(word_degree(alphabet, w)) +
                        ", expected " + std::to_string(alphabet.degree(g) - 1));
      }
    }
  }
  return d;
}

bool verify_d_squared(const Differential& d) {
  for (Gen g = 0; g < d.size(); ++g) {
    if (!d.apply(d[g]).empty()) return false;
  }
  return true;
}

Chain suppress_multi_nonzero(const GradedAlphabet& alphabet, const Chain& c) {
  Chain out;
  for (const Word& w : c) {
    const auto nonzero = std::count_if(w.begin(), w.end(),
                                       [&](Gen g) { return alphabet.degree(g) != 0; });
    if (nonzero <= 1) out.toggle(w);
  }
  return out;
}

}  // namespace legch
