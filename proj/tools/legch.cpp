#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "legch/constructions.hpp"
#include "legch/linearized.hpp"
#include "legch/table.hpp"

using namespace legch;

namespace {

enum Exit { kOk = 0, kComputation = 1, kInput = 2, kSelftest = 3 };

struct Globals {
  bool json = false;
  bool quiet = false;
  std::size_t cap = kDefaultSearchCap;
};

FrontDiagram load_front(const std::string& path) {
  std::stringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read " + path);
    buf << in.rdbuf();
  }
  return parse_front(buf.str());
}

void emit(const Globals& g, const Json& j, const std::string& text) {
  if (g.json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

void emit_front(const Globals& g, const FrontDiagram& f) {
  emit(g, Json{{"schema", 1}, {"front", serialize_front(f)}}, serialize_front(f));
}

Json words_json(const GradedAlphabet& alphabet, const Chain& c) {
  Json out = Json::array();
  for (const Word& w : c) {
    Json word = Json::array();
    for (Gen x : w) word.push_back(alphabet.name(x));
    out.push_back(word);
  }
  return out;
}

std::string names(const GradedAlphabet& alphabet, const std::vector<Gen>& gens) {
  std::string out = "{";
  for (std::size_t i = 0; i < gens.size(); ++i) out += (i ? " " : "") + alphabet.name(gens[i]);
  return out + "}";
}

int cmd_invariants(const Globals& g, const std::string& file) {
  const FrontDiagram f = load_front(file);
  const ClassicalInvariants inv = classical_invariants(f);
  Json j{{"schema", 1},        {"tb", inv.tb},
         {"r", inv.r},         {"writhe", inv.writhe},
         {"cusps", inv.cusps}, {"up_cusps", inv.up_cusps},
         {"down_cusps", inv.down_cusps}, {"crossings", f.crossing_count()}};
  std::ostringstream out;
  out << "tb = " << inv.tb << "\nr = " << inv.r << "\nwrithe = " << inv.writhe
      << "\ncusps = " << inv.cusps << " (up " << inv.up_cusps << ", down " << inv.down_cusps
      << ")\ncrossings = " << f.crossing_count() << "\n";
  if (inv.r == 0) {
    const GradedAlphabet a = maslov_and_grading(f);
    Json counts = Json::object();
    out << "generators by degree:";
    for (const auto& [k, n] : a.counts()) {
      counts[std::to_string(k)] = n;
      out << " " << k << ":" << n;
    }
    out << "\n";
    j["degree_counts"] = counts;
  }
  emit(g, j, out.str());
  return kOk;
}

int cmd_dga(const Globals& g, const std::string& file) {
  const FrontDiagram f = load_front(file);
  const GradedAlphabet a = maslov_and_grading(f);
  const Differential d = differential(f, a);
  Json j{{"schema", 1}, {"generators", Json::array()}, {"differential", Json::object()}};
  std::ostringstream out;
  for (Gen x = 0; x < a.size(); ++x) {
    j["generators"].push_back({{"id", a.name(x)}, {"degree", a.degree(x)}});
    j["differential"][a.name(x)] = words_json(a, d[x]);
    out << a.name(x) << "  degree " << a.degree(x) << "  d = " << format_chain(a, d[x]) << "\n";
  }
  emit(g, j, out.str());
  return kOk;
}

int cmd_aug(const Globals& g, const std::string& file) {
  const FrontDiagram f = load_front(file);
  if (classical_invariants(f).r != 0) {
    emit(g, Json{{"schema", 1}, {"augmentations", Json::array()}}, "no augmentations (r != 0)\n");
    return kOk;
  }
  const GradedAlphabet a = maslov_and_grading(f);
  const auto augs = enumerate_augmentations(differential(f, a), a, g.cap);
  Json list = Json::array();
  std::ostringstream out;
  for (const Augmentation& eps : augs) {
    Json set = Json::array();
    for (Gen x : eps.augmented()) set.push_back(a.name(x));
    list.push_back(set);
    out << names(a, eps.augmented()) << "\n";
  }
  if (!g.quiet) out << augs.size() << " augmentations\n";
  emit(g, Json{{"schema", 1}, {"augmentations", list}}, out.str());
  return kOk;
}

int cmd_poly(const Globals& g, const std::string& file, bool reduced_only, bool witness) {
  const FrontDiagram f = load_front(file);
  const ChekanovSet cs = chekanov_set(f, g.cap);
  Json j{{"schema", 1}, {"tb", cs.invariants.tb}, {"r", cs.invariants.r}, {"ch", cs.ch()},
         {"polynomials", Json::array()}};
  std::ostringstream out;
  out << "tb = " << cs.invariants.tb << ", r = " << cs.invariants.r << ", ch = " << cs.ch()
      << "\n";
  for (const auto& [p, count] : cs.multiplicity) {
    const auto it = std::find_if(cs.per_augmentation.begin(), cs.per_augmentation.end(),
                                 [&](const AugmentationPolynomial& a) { return a.reduced == p; });
    j["polynomials"].push_back(
        {{"poly", poly_to_json(it->chekanov)}, {"reduced", poly_to_json(p)}, {"count", count}});
    out << "p = " << format_poly(p);
    if (!reduced_only) out << "  P = " << format_poly(it->chekanov);
    out << "  (" << count << " augmentation" << (count == 1 ? "" : "s") << ")\n";
  }
  if (witness && cs.invariants.r == 0) {
    const GradedAlphabet a = maslov_and_grading(f);
    const Differential d = differential(f, a);
    j["witnesses"] = Json::array();
    for (const AugmentationPolynomial& ap : cs.per_augmentation) {
      const LinearizedComplex c = linearized_complex(d, a, ap.eps);
      Json w{{"augmentation", Json::array()}, {"homology", Json::object()}};
      for (Gen x : ap.eps.augmented()) w["augmentation"].push_back(a.name(x));
      out << "augmentation " << names(a, ap.eps.augmented()) << "\n";
      for (const auto& [k, gens] : c.basis) {
        const auto basis = homology_basis(c, k);
        if (basis.empty()) continue;
        Json cycles = Json::array();
        out << "  H_" << k << ":";
        for (const LinearChain& cycle : basis) {
          Json cj = Json::array();
          std::string text;
          for (Gen x : cycle) {
            cj.push_back(a.name(x));
            text += (text.empty() ? "" : " + ") + a.name(x);
          }
          cycles.push_back(cj);
          out << " [" << text << "]";
        }
        out << "\n";
        w["homology"][std::to_string(k)] = cycles;
      }
      j["witnesses"].push_back(w);
    }
  }
  emit(g, j, out.str());
  return kOk;
}

int cmd_report(const Globals& g, const std::string& file) {
  std::cout << report(load_front(file), g.json ? ReportFormat::Json : ReportFormat::Text, g.cap);
  return kOk;
}

int cmd_selftest(const Globals& g, const std::string& fronts, const std::string& expected,
                 std::size_t random_fronts) {
  SelftestOptions opt;
  opt.cap = g.cap;
  opt.random_fronts = random_fronts;
  if (!fronts.empty()) {
    opt.fronts_dir = fronts;
    if (!expected.empty()) opt.expected_file = expected;
  }
  const SelftestReport rep = selftest(opt);
  if (g.json) {
    std::cout << rep.json().dump(2) << "\n";
  } else if (g.quiet) {
    std::cout << "selftest: " << (rep.passed() ? "PASS" : "FAIL") << "\n";
  } else {
    std::cout << rep.text();
  }
  return rep.passed() ? kOk : kSelftest;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chekanov DGA, augmentations and Chekanov polynomials of Legendrian fronts"};
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--json", g.json, "Emit JSON");
  app.add_flag("--quiet", g.quiet, "Suppress summaries");
  app.add_option("--cap", g.cap, "Maximum number of degree-0 crossings to search")
      ->check(CLI::Range(std::size_t{1}, std::size_t{64}));

  std::string file, file_b, poly_text, fronts_dir, expected_file;
  bool reduced_only = false, witness = false;
  int n = 0, iterate = 1;
  std::size_t random_fronts = 200;
  std::function<int()> run;

  auto sub = [&](const char* name, const char* help) {
    CLI::App* s = app.add_subcommand(name, help);
    s->fallthrough();
    return s;
  };

  auto* inv = sub("invariants", "Classical invariants and generator degrees");
  inv->add_option("file", file, "Front file, or - for stdin")->required();
  inv->callback([&] { run = [&] { return cmd_invariants(g, file); }; });

  auto* dga = sub("dga", "Generators, degrees and differential");
  dga->add_option("file", file, "Front file, or - for stdin")->required();
  dga->callback([&] { run = [&] { return cmd_dga(g, file); }; });

  auto* aug = sub("aug", "List augmentations");
  aug->add_option("file", file, "Front file, or - for stdin")->required();
  aug->callback([&] { run = [&] { return cmd_aug(g, file); }; });

  auto* poly = sub("poly", "Chekanov polynomials");
  poly->add_option("file", file, "Front file, or - for stdin")->required();
  poly->add_flag("--reduced", reduced_only, "Print only reduced polynomials");
  poly->add_flag("--witness", witness, "Print homology bases per augmentation");
  poly->callback([&] { run = [&] { return cmd_poly(g, file, reduced_only, witness); }; });

  auto* rep = sub("report", "Full report");
  rep->add_option("file", file, "Front file, or - for stdin")->required();
  rep->callback([&] { run = [&] { return cmd_report(g, file); }; });

  auto* sum = sub("sum", "Connected sum of two fronts");
  sum->add_option("a", file, "First front file")->required();
  sum->add_option("b", file_b, "Second front file")->required();
  sum->callback([&] {
    run = [&] {
      emit_front(g, connected_sum(load_front(file), load_front(file_b)));
      return kOk;
    };
  });

  auto* tau_cmd = sub("tau", "Tangle replacement on a special front");
  tau_cmd->add_option("file", file, "Front file, or - for stdin")->required();
  tau_cmd->add_option("--iterate", iterate, "Number of applications")->check(CLI::NonNegativeNumber);
  tau_cmd->callback([&] {
    run = [&] {
      emit_front(g, tau_iterate(load_front(file), iterate));
      return kOk;
    };
  });

  auto* kn = sub("kn", "The knot K_n");
  kn->add_option("n", n, "n >= 1")->required();
  kn->callback([&] {
    run = [&] {
      emit_front(g, k_n(n));
      return kOk;
    };
  });

  auto* twist = sub("twist", "Twist knot with reduced polynomial t^d");
  twist->add_option("d", n, "d >= 1")->required();
  twist->callback([&] {
    run = [&] {
      emit_front(g, twist_knot(n));
      return kOk;
    };
  });

  auto* real = sub("realize", "Front whose unique reduced polynomial is the given one");
  real->add_option("poly", poly_text, "Polynomial, e.g. \"1+2t+t^3\"")->required();
  real->callback([&] {
    run = [&] {
      emit_front(g, realize(parse_poly(poly_text)));
      return kOk;
    };
  });

  auto* st = sub("selftest", "Run the built-in regression table and property suites");
  st->add_option("--fronts", fronts_dir, "Directory of NAME.front files to check");
  st->add_option("--expected", expected_file, "Expected-values JSON keyed by NAME");
  st->add_option("--random", random_fronts, "Number of random fronts in the property suite");
  st->callback([&] { run = [&] { return cmd_selftest(g, fronts_dir, expected_file, random_fronts); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  try {
    return run();
  } catch (const Error& e) {
    std::cerr << "legch: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return is_input_error(e.kind()) ? kInput : kComputation;
  } catch (const std::exception& e) {
    std::cerr << "legch: " << e.what() << "\n";
    return kComputation;
  }
}
