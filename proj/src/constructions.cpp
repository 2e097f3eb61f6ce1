#include "legch/constructions.hpp"

#include <algorithm>
#include <optional>

#include "legch/linearized.hpp"

namespace legch {

FrontDiagram unknot() { return FrontDiagram::plat(2, {}, "unknot"); }

FrontDiagram k1() { return FrontDiagram::plat(4, {2, 2, 2}, "K1"); }

FrontDiagram k2() { return FrontDiagram::plat(6, {2, 4, 2, 4, 3, 3, 2, 4}, "K2"); }

FrontDiagram left_trefoil() {
  return FrontDiagram::plat(6, {2, 1, 1, 1, 2, 2, 4}, "left_trefoil");
}

namespace {

std::vector<Event> shifted(const std::vector<Event>& events, int by) {
  std::vector<Event> out = events;
  for (Event& e : out) e.pos += by;
  return out;
}

std::string joined_name(const std::string& a, const std::string& b) {
  if (a.empty() || b.empty()) return {};
  return a + "#" + b;
}

}  // namespace

FrontDiagram connected_sum(const FrontDiagram& k, const FrontDiagram& k_prime) {
  const int m2 = k.strands();
  std::vector<Event> events = k.events();
  const std::vector<Event> lower = shifted(k_prime.events(), m2);
  events.insert(events.end(), lower.begin(), lower.end());
  events.push_back(Event::crossing(m2));
  return FrontDiagram(std::move(events), joined_name(k.name(), k_prime.name()));
}

FrontDiagram connected_sum(const std::vector<FrontDiagram>& parts) {
  if (parts.empty()) return unknot();
  FrontDiagram out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out = connected_sum(out, parts[i]);
  return out;
}

FrontDiagram k_n(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "k_n needs n >= 1");
  std::vector<int> even, odd;
  for (int i = 2; i <= 2 * n; i += 2) even.push_back(i);
  for (int i = 3; i <= 2 * n - 1; i += 2) odd.push_back(i);
  std::vector<int> word;
  for (int rep = 0; rep < 2; ++rep) word.insert(word.end(), even.begin(), even.end());
  for (int rep = 0; rep < 2; ++rep) word.insert(word.end(), odd.begin(), odd.end());
  word.insert(word.end(), even.begin(), even.end());
  return FrontDiagram::plat(2 * n + 2, word, "K" + std::to_string(n));
}

FrontDiagram twist_knot(int d) {
  if (d < 1) throw Error(ErrorKind::InvalidArgument, "twist_knot needs d >= 1");
  const std::string name = "T" + std::to_string(d);
  if (d == 1) return FrontDiagram::plat(4, {2, 2, 2, 1, 1, 1, 2}, name);
  // Twist region s2^3 between arcs whose potentials differ by d, then a
  // ladder of cusps stepping the potential down one unit at a time.
  std::vector<int> word = {2, 2, 2, 1};
  for (int j = 1; j <= d - 2; ++j) {
    word.insert(word.end(), {2 * j + 1, 2 * j, 2 * j + 2, 2 * j + 1, 2 * j});
  }
  word.insert(word.end(), {2 * d - 1, 2 * d - 2, 2 * d - 2});
  return FrontDiagram::plat(2 * d, word, name);
}

FrontDiagram realize(const LaurentPoly& p) {
  std::vector<FrontDiagram> parts;
  for (const auto& [e, c] : p.terms()) {
    if (e < 0 || c < 0) {
      throw Error(ErrorKind::InvalidArgument,
                  "cannot realize " + format_poly(p) +
                      ": coefficients and exponents must be nonnegative");
    }
    for (long long i = 0; i < c; ++i) parts.push_back(e == 0 ? k1() : twist_knot(e));
  }
  return connected_sum(parts);
}

// ---------------------------------------------------------------------------

namespace {

std::optional<std::size_t> special_e_event(const FrontDiagram& front) {
  const auto& events = front.events();
  std::optional<std::size_t> last;
  for (std::size_t k = 0; k < events.size(); ++k) {
    if (events[k].is_crossing() && events[k].pos == 2) last = k;
  }
  if (!last) return std::nullopt;
  for (std::size_t k = *last + 1; k < events.size(); ++k) {
    if (events[k].pos <= 3) return std::nullopt;
  }
  return last;
}

}  // namespace

bool is_special(const FrontDiagram& front) {
  return front.right_cusp_count() >= 2 && special_e_event(front).has_value();
}

SpecialForm special_form(const FrontDiagram& front) {
  const auto k = special_e_event(front);
  if (!k || front.right_cusp_count() < 2) {
    throw Error(ErrorKind::NotSpecialForm,
                "no crossing at position 2 followed only by events below position 3");
  }
  const GradedAlphabet alphabet = maslov_and_grading(front);
  const FrontLayout& lay = front.layout();
  const auto& before = lay.slab_arcs[*k];
  SpecialForm out{front, *k, lay.crossing_of_event[*k], front.crossing_count(),
                  front.crossing_count() + 1, 0};
  out.d = alphabet.mu()[static_cast<std::size_t>(before[0])] -
          alphabet.mu()[static_cast<std::size_t>(before[1])];
  return out;
}

int maslov_number(const SpecialForm& special) { return special.d; }

TauResult tau_detailed(const SpecialForm& special) {
  const FrontDiagram& k = special.diagram;
  const auto& events = k.events();
  const std::size_t ke = special.e_event;

  std::vector<Event> out(events.begin(), events.begin() + static_cast<std::ptrdiff_t>(ke));
  out.insert(out.end(), {Event::left_cusp(1), Event::crossing(2), Event::crossing(2),
                         Event::crossing(3), Event::crossing(3), Event::crossing(2),
                         Event::crossing(4)});
  for (std::size_t i = ke + 1; i < events.size(); ++i) {
    Event e = events[i];
    e.pos += 2;
    out.push_back(e);
  }

  const int n = k.crossing_count();
  const Gen base = special.e;
  std::string name = k.name().empty() ? std::string() : "tau(" + k.name() + ")";
  TauResult res{FrontDiagram(std::move(out), std::move(name)),
                base, base + 1, base + 4, base + 2, base + 3, n + 5, {}};
  res.old_to_new.resize(static_cast<std::size_t>(k.generator_count()));
  for (Gen g = 0; g < n; ++g) {
    res.old_to_new[static_cast<std::size_t>(g)] = g < base ? g : (g == base ? base + 5 : g + 5);
  }
  for (Gen g = n; g < k.generator_count(); ++g) {
    res.old_to_new[static_cast<std::size_t>(g)] = g + 6;
  }
  return res;
}

FrontDiagram tau(const FrontDiagram& front) { return tau_detailed(special_form(front)).diagram; }

FrontDiagram tau_iterate(const FrontDiagram& front, int n) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "tau iteration count must be >= 0");
  FrontDiagram out = front;
  for (int i = 0; i < n; ++i) out = tau(out);
  return out;
}

bool is_fertile(const Augmentation& eps, const SpecialForm& special, const Differential& d,
                const GradedAlphabet& alphabet) {
  if (special.d == 0) {
    throw Error(ErrorKind::MaslovZero, "fertility is undefined for Maslov number 0");
  }
  if (special.d > 1) return true;
  if (special.d < 0) return false;
  const SplitCusp split = split_at_e(d, alphabet, special.s, special.e);
  if (eps.evaluate(split.s1)) return false;

  const LinearizedComplex complex = linearized_complex(d, alphabet, eps);
  auto it = complex.boundary.find(0);
  if (it == complex.boundary.end() || it->second.cols() == 0) return true;
  const BitMatrix& d0 = it->second;
  const std::vector<Gen>& gens = complex.basis.at(0);
  const auto e_row = static_cast<std::size_t>(
      std::find(gens.begin(), gens.end(), special.e) - gens.begin());
  BitMatrix others(gens.size() - 1, d0.cols());
  BitMatrix with_e(gens.size(), d0.cols());
  for (std::size_t r = 0, o = 0; r < gens.size(); ++r) {
    for (std::size_t c = 0; c < d0.cols(); ++c) {
      with_e.set(r, c, d0.get(r, c));
      if (r != e_row) others.set(o, c, d0.get(r, c));
    }
    if (r != e_row) ++o;
  }
  return rank_gf2(others) == rank_gf2(with_e);
}

WordFamily word_family(std::string_view w, const FrontDiagram& base, const Augmentation& eps) {
  if (w.empty() || w.front() != 'a' ||
      w.find_first_not_of("as") != std::string_view::npos ||
      w.find("ss") != std::string_view::npos) {
    throw Error(ErrorKind::InvalidArgument,
                "word '" + std::string(w) + "' must start with 'a', use only 'a' and 's', and avoid \"ss\"");
  }
  WordFamily fam{base, {eps}};
  for (char letter : w) {
    const TauResult t = tau_detailed(special_form(fam.diagram));
    const GradedAlphabet alphabet = maslov_and_grading(t.diagram);
    const Differential d = differential(t.diagram, alphabet);
    const std::vector<std::vector<Gen>> extensions =
        letter == 'a' ? std::vector<std::vector<Gen>>{{t.a, t.b, t.c}, {t.a, t.b}}
                      : std::vector<std::vector<Gen>>{{t.a}, {t.b, t.c}, {t.c}};
    std::vector<Augmentation> next;
    for (const Augmentation& m : fam.members) {
      std::vector<Gen> mapped;
      for (Gen g : m.augmented()) mapped.push_back(t.old_to_new[static_cast<std::size_t>(g)]);
      for (const auto& alpha : extensions) {
        Augmentation cand = Augmentation(mapped).with(alpha);
        if (is_augmentation(d, alphabet, cand)) next.push_back(std::move(cand));
      }
    }
    std::sort(next.begin(), next.end());
    fam.diagram = t.diagram;
    fam.members = std::move(next);
  }
  return fam;
}

}  // namespace legch
