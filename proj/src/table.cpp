#include "legch/table.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "legch/constructions.hpp"
#include "legch/dga.hpp"

namespace legch {

namespace {

std::string text_of(const FrontDiagram& front) { return serialize_front(front); }

KnotRecord record(std::string label, std::string front, int tb, int r,
                  std::vector<std::pair<std::string, int>> reduced,
                  std::optional<int> augs, std::string citation) {
  KnotRecord rec{std::move(label), std::move(front), tb, r, {}, {}, augs, std::move(citation)};
  for (const auto& [text, count] : reduced) {
    const LaurentPoly p = parse_poly(text);
    rec.expected_reduced.push_back(p);
    if (count > 0) rec.expected_multiplicity[p] = count;
  }
  std::sort(rec.expected_reduced.begin(), rec.expected_reduced.end());
  return rec;
}

std::vector<KnotRecord> make_records() {
  std::vector<KnotRecord> out;
  out.push_back(record("K1", "# name: K1\nplat 4 : 2 2 2\n", 1, 0, {{"1", 5}}, 5,
                       "K1 worked example: five augmentations, each with polynomial t+2"));
  out.push_back(record("K2", "# name: K2\nplat 6 : 2 4 2 4 3 3 2 4\n", 1, 0,
                       {{"1", 12}, {"2+t", 4}}, 16,
                       "K2 worked example: sixteen augmentations, four with 2+t"));
  out.push_back(record("K3", text_of(k_n(3)), 1, 0, {{"1", 0}, {"2+t", 0}, {"3+2t", 0}}, 62,
                       "K_n family, n = 3"));
  out.push_back(record("K4", text_of(k_n(4)), 1, 0,
                       {{"2+t", 0}, {"3+2t", 0}, {"4+3t", 0}}, 220, "K_n family, n = 4"));
  out.push_back(record("K5", text_of(k_n(5)), 1, 0,
                       {{"2+t", 0}, {"3+2t", 0}, {"4+3t", 0}, {"5+4t", 0}}, 812,
                       "K_n family, n = 5"));
  out.push_back(record("0_1", "# name: 0_1\nplat 2 :\n", -1, 0, {{"0", 1}}, 1,
                       "tabulation row 0_1: (-1,0), reduced 0"));
  out.push_back(record("3_1", text_of(left_trefoil().renamed("3_1")), -6, 1, {}, 0,
                       "tabulation row 3_1: (-6,1), no augmentations"));
  for (int d = 1; d <= 3; ++d) {
    const std::string td = d == 1 ? "t" : "t^" + std::to_string(d);
    out.push_back(record("twist_" + std::to_string(d), text_of(twist_knot(d)),
                         d % 2 == 1 ? -3 : 1, 0, {{td, 2}}, 2,
                         "twist knot with unique reduced polynomial " + td));
  }
  out.push_back(record("2K2", text_of(connected_sum({k2(), k2()})), 3, 0,
                       {{"2", 0}, {"3+t", 0}, {"4+2t", 0}}, 256,
                       "connected sums nK2: {kt+n+k : k = 0..n}, n = 2"));
  out.push_back(record("3K2", text_of(connected_sum({k2(), k2(), k2()})), 5, 0,
                       {{"3", 0}, {"4+t", 0}, {"5+2t", 0}, {"6+3t", 0}}, 4096,
                       "connected sums nK2: {kt+n+k : k = 0..n}, n = 3"));
  out.push_back(record("tau1_K1", text_of(tau_iterate(k1(), 1)), 1, 0,
                       {{"1", 12}, {"2+t", 4}}, 16, "tangle replacement applied once to K1"));
  out.push_back(record("tau2_K1", text_of(tau_iterate(k1(), 2)), 1, 0,
                       {{"1", 0}, {"2+t", 0}, {"3+2t", 0}}, 62,
                       "tangle replacement applied twice to K1"));
  out.push_back(record("realize_1+2t", text_of(realize(parse_poly("1+2t"))), -3, 0,
                       {{"1+2t", 20}}, 20, "realization of 1+2t as K1 # T1 # T1"));
  out.push_back(record("realize_1+2t+t^3", text_of(realize(parse_poly("1+2t+t^3"))), -5, 0,
                       {{"1+2t+t^3", 40}}, 40, "realization of 1+2t+t^3"));
  out.push_back(record("4_1", "# name: 4_1\nplat 6 : 2 4 4 3 2 2 5 4\n", -3, 0, {{"t", 1}}, 1,
                       "tabulation row 4_1: (-3,0), reduced t"));
  out.push_back(record("9_45_mirror",
                       text_of(tau(parse_front("plat 6 : 2 4 4 3 2 2 5 4")).renamed("9_45_mirror")),
                       1, 0, {{"1", 3}, {"1+t+t^2", 2}}, 5,
                       "tabulation row 9_45 mirror: (1,0), reduced 1 and 1+t+t^2"));
  return out;
}

std::string format_multiplicity(const std::map<LaurentPoly, int>& m) {
  std::string out = "{";
  bool first = true;
  for (const auto& [p, count] : m) {
    if (!first) out += ", ";
    first = false;
    out += format_poly(p) + " x" + std::to_string(count);
  }
  return out + "}";
}

std::string format_set(const std::vector<LaurentPoly>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? ", " : "") + format_poly(s[i]);
  return out + "}";
}

}  // namespace

const std::vector<KnotRecord>& builtin_records() {
  static const std::vector<KnotRecord> records = make_records();
  return records;
}

RecordResult check_record(const KnotRecord& rec, std::size_t cap) {
  RecordResult res;
  res.label = rec.label;
  try {
    const ChekanovSet cs = chekanov_set(parse_front(rec.front), cap);
    res.tb = cs.invariants.tb;
    res.r = cs.invariants.r;
    res.aug_count = cs.per_augmentation.size();
    res.multiplicity = cs.multiplicity;
    if (res.tb != rec.expected_tb) {
      res.mismatches.push_back("tb: expected " + std::to_string(rec.expected_tb) + ", got " +
                               std::to_string(res.tb));
    }
    if (res.r != rec.expected_r) {
      res.mismatches.push_back("r: expected " + std::to_string(rec.expected_r) + ", got " +
                               std::to_string(res.r));
    }
    if (cs.reduced_set() != rec.expected_reduced) {
      res.mismatches.push_back("reduced: expected " + format_set(rec.expected_reduced) +
                               ", got " + format_set(cs.reduced_set()));
    }
    for (const auto& [p, count] : rec.expected_multiplicity) {
      auto it = cs.multiplicity.find(p);
      const int got = it == cs.multiplicity.end() ? 0 : it->second;
      if (got != count) {
        res.mismatches.push_back("multiplicity of " + format_poly(p) + ": expected " +
                                 std::to_string(count) + ", got " + std::to_string(got));
      }
    }
    if (rec.expected_aug_count &&
        res.aug_count != static_cast<std::size_t>(*rec.expected_aug_count)) {
      res.mismatches.push_back("augmentations: expected " +
                               std::to_string(*rec.expected_aug_count) + ", got " +
                               std::to_string(res.aug_count));
    }
  } catch (const std::exception& e) {
    res.error = e.what();
  }
  res.passed = res.error.empty() && res.mismatches.empty();
  return res;
}

std::vector<std::string> property_failures(const FrontDiagram& front, std::size_t cap) {
  std::vector<std::string> fail;
  const std::string label = serialize_front(front);
  auto note = [&](const std::string& what) { fail.push_back(what + " for " + label); };
  try {
    const ClassicalInvariants inv = classical_invariants(front);
    if (inv.tb != inv.writhe - inv.cusps / 2) note("tb != w - c/2");
    if (inv.r == 0 && inv.tb % 2 == 0) note("tb even with r = 0");
    if (parse_front(serialize_front(front)) != front) note("serialize round trip");
    if (inv.r != 0) {
      if (!verify_d_squared(ungraded_differential(front))) note("ungraded d^2 != 0");
      if (chekanov_set(front, cap).ch() != 0) note("r != 0 with ch > 0");
      return fail;
    }
    const GradedAlphabet alphabet = maslov_and_grading(front);
    const Differential d = differential(front, alphabet);
    if (!verify_d_squared(d)) note("d^2 != 0");
    long long euler = 0;
    for (const auto& [k, n] : alphabet.counts()) euler += (k % 2 == 0 ? 1 : -1) * n;
    if (euler != inv.tb) note("Euler characteristic != tb");
    for (const Augmentation& eps : enumerate_augmentations(d, alphabet, cap)) {
      if (!is_augmentation(d, alphabet, eps)) note("search returned a non-augmentation");
      const LinearizedComplex alg = linearized_complex(d, alphabet, eps);
      const LinearizedComplex geo = geometric_linearized(front, alphabet, eps);
      if (alg.basis != geo.basis || alg.boundary != geo.boundary) {
        note("geometric and algebraic linearizations differ");
      }
      const LaurentPoly p = poincare_polynomial(alg);
      if (!has_chekanov_shape(p, inv.tb)) note("P = " + format_poly(p) + " lacks duality shape");
      const auto shortcut = linear_shortcut(alg, alphabet, inv.tb);
      if (shortcut && *shortcut != reduce(p)) note("linear shortcut disagrees");
    }
  } catch (const std::exception& e) {
    note(std::string("exception: ") + e.what());
  }
  return fail;
}

FrontDiagram random_front(std::mt19937_64& rng, int max_pairs, int max_crossings,
                          bool interior_cusps) {
  for (;;) {
    const int pairs = std::uniform_int_distribution<int>(1, max_pairs)(rng);
    const int crossings =
        pairs == 1 ? 0 : std::uniform_int_distribution<int>(0, max_crossings)(rng);
    std::vector<Event> events;
    int strands = 0;
    int cusps_left = pairs;
    int crossings_left = crossings;
    while (cusps_left > 0 || crossings_left > 0) {
      bool cusp = cusps_left > 0 && (strands < 2 || crossings_left == 0 || !interior_cusps);
      if (!cusp && cusps_left > 0) cusp = std::bernoulli_distribution(0.25)(rng);
      if (cusp) {
        const int pos = interior_cusps
                            ? std::uniform_int_distribution<int>(1, strands + 1)(rng)
                            : strands + 1;
        events.push_back(Event::left_cusp(pos));
        strands += 2;
        --cusps_left;
      } else {
        events.push_back(
            Event::crossing(std::uniform_int_distribution<int>(1, strands - 1)(rng)));
        --crossings_left;
      }
    }
    try {
      return FrontDiagram(std::move(events));
    } catch (const Error&) {
    }
  }
}

PropertySummary run_property_suite(std::size_t random_count, std::uint64_t seed,
                                   std::size_t cap) {
  PropertySummary out;
  auto add = [&](const FrontDiagram& f) {
    ++out.fronts;
    for (std::string& s : property_failures(f, cap)) out.failures.push_back(std::move(s));
  };
  for (const KnotRecord& rec : builtin_records()) add(parse_front(rec.front));
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < random_count; ++i) add(random_front(rng, 4, 12));
  return out;
}

std::vector<TableCheck> check_fronts_directory(const std::filesystem::path& dir,
                                               const Json& expected, std::size_t cap) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".front") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  const Json& knots = expected.contains("knots") ? expected.at("knots") : expected;
  std::vector<TableCheck> out;
  for (const auto& path : files) {
    TableCheck row{path.stem().string(), false, false, {}};
    if (!knots.contains(row.name)) {
      row.detail = "no expected entry";
      out.push_back(row);
      continue;
    }
    const Json& want = knots.at(row.name);
    row.unverified = want.value("unverified_transcription", false);
    try {
      std::ifstream in(path);
      std::stringstream buf;
      buf << in.rdbuf();
      const ChekanovSet cs = chekanov_set(parse_front(buf.str()), cap);
      std::vector<LaurentPoly> reduced;
      for (const auto& p : want.at("reduced")) reduced.push_back(parse_poly(p.get<std::string>()));
      std::sort(reduced.begin(), reduced.end());
      const int tb = want.at("tb").get<int>();
      const int r = want.at("r").get<int>();
      row.passed = cs.invariants.tb == tb && cs.invariants.r == r && cs.reduced_set() == reduced;
      row.detail = "(" + std::to_string(cs.invariants.tb) + "," + std::to_string(cs.invariants.r) +
                   ") " + format_set(cs.reduced_set());
      if (!row.passed) {
        row.detail += ", expected (" + std::to_string(tb) + "," + std::to_string(r) + ") " +
                      format_set(reduced);
      }
    } catch (const std::exception& e) {
      row.detail = e.what();
    }
    out.push_back(row);
  }
  return out;
}

bool SelftestReport::passed() const {
  for (const auto& r : records)
    if (!r.passed) return false;
  for (const auto& t : table)
    if (!t.passed && !t.unverified) return false;
  return properties.failures.empty();
}

std::string SelftestReport::text() const {
  std::ostringstream out;
  for (const RecordResult& r : records) {
    out << "record " << r.label << ": " << (r.passed ? "PASS" : "FAIL");
    if (r.error.empty()) {
      out << "  tb " << r.tb << " r " << r.r << " augmentations " << r.aug_count << " reduced "
          << format_multiplicity(r.multiplicity);
    } else {
      out << "  error: " << r.error;
    }
    out << "\n";
    for (const std::string& m : r.mismatches) out << "  " << m << "\n";
  }
  out << "properties: " << properties.fronts << " fronts, " << properties.failures.size()
      << " failures\n";
  for (const std::string& f : properties.failures) out << "  " << f << "\n";
  for (const TableCheck& t : table) {
    out << "table " << t.name << ": "
        << (t.passed ? "PASS" : t.unverified ? "UNVERIFIED" : "FAIL") << "  " << t.detail
        << "\n";
  }
  out << "selftest: " << (passed() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

Json SelftestReport::json() const {
  Json j;
  j["schema"] = 1;
  j["passed"] = passed();
  j["records"] = Json::array();
  for (const RecordResult& r : records) {
    Json rec;
    rec["label"] = r.label;
    rec["passed"] = r.passed;
    rec["tb"] = r.tb;
    rec["r"] = r.r;
    rec["augmentations"] = r.aug_count;
    rec["reduced"] = Json::array();
    for (const auto& [p, count] : r.multiplicity) {
      rec["reduced"].push_back({{"reduced", poly_to_json(p)}, {"count", count}});
    }
    rec["mismatches"] = r.mismatches;
    if (!r.error.empty()) rec["error"] = r.error;
    j["records"].push_back(rec);
  }
  j["properties"] = {{"fronts", properties.fronts}, {"failures", properties.failures}};
  j["table"] = Json::array();
  for (const TableCheck& t : table) {
    j["table"].push_back({{"name", t.name},
                          {"passed", t.passed},
                          {"unverified_transcription", t.unverified},
                          {"detail", t.detail}});
  }
  return j;
}

SelftestReport selftest(const SelftestOptions& options) {
  SelftestReport out;
  for (const KnotRecord& rec : builtin_records()) out.records.push_back(check_record(rec, options.cap));
  out.properties = run_property_suite(options.random_fronts, options.seed, options.cap);
  if (options.fronts_dir) {
    Json expected = Json::object();
    if (options.expected_file) {
      std::ifstream in(*options.expected_file);
      if (!in) {
        throw Error(ErrorKind::InvalidArgument,
                    "cannot read " + options.expected_file->string());
      }
      try {
        expected = Json::parse(in);
      } catch (const Json::exception& e) {
        throw Error(ErrorKind::Syntax, options.expected_file->string() + ": " + e.what());
      }
    }
    out.table = check_fronts_directory(*options.fronts_dir, expected, options.cap);
  }
  return out;
}

Json poly_to_json(const LaurentPoly& p) {
  Json j = Json::object();
  for (const auto& [e, c] : p.terms()) j[std::to_string(e)] = c;
  return j;
}

LaurentPoly poly_from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorKind::Syntax, "polynomial must be a JSON object");
  LaurentPoly p;
  for (const auto& [key, value] : j.items()) {
    std::size_t used = 0;
    int e = 0;
    try {
      e = std::stoi(key, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != key.size() || key.empty()) {
      throw Error(ErrorKind::Syntax, "bad exponent key '" + key + "'");
    }
    if (!value.is_number_integer()) {
      throw Error(ErrorKind::Syntax, "coefficient of t^" + key + " is not an integer");
    }
    p.add(e, value.get<long long>());
  }
  return p;
}

namespace {

Json word_json(const GradedAlphabet& alphabet, const Word& w) {
  Json out = Json::array();
  for (Gen g : w) out.push_back(alphabet.name(g));
  return out;
}

}  // namespace

Json report_json(const FrontDiagram& front, std::size_t cap) {
  const ClassicalInvariants inv = classical_invariants(front);
  Json j;
  j["schema"] = 1;
  j["name"] = front.name();
  j["front"] = serialize_front(front);
  j["tb"] = inv.tb;
  j["r"] = inv.r;
  j["writhe"] = inv.writhe;
  j["cusps"] = inv.cusps;

  const bool graded = inv.r == 0;
  const GradedAlphabet alphabet =
      graded ? maslov_and_grading(front)
             : GradedAlphabet(front.crossing_count(), front.right_cusp_count(),
                              std::vector<int>(static_cast<std::size_t>(front.generator_count())),
                              {});
  const Differential d = graded ? differential(front, alphabet) : ungraded_differential(front);
  j["generators"] = Json::array();
  j["differential"] = Json::object();
  for (Gen g = 0; g < alphabet.size(); ++g) {
    Json gen{{"id", alphabet.name(g)}, {"kind", alphabet.is_crossing(g) ? "crossing" : "cusp"}};
    gen["degree"] = graded ? Json(alphabet.degree(g)) : Json(nullptr);
    j["generators"].push_back(gen);
    Json words = Json::array();
    for (const Word& w : d[g]) words.push_back(word_json(alphabet, w));
    j["differential"][alphabet.name(g)] = words;
  }

  const ChekanovSet cs = chekanov_set(front, cap);
  j["augmentations"] = cs.per_augmentation.size();
  j["ch"] = cs.ch();
  j["polynomials"] = Json::array();
  for (const auto& [p, count] : cs.multiplicity) {
    const auto it = std::find_if(cs.per_augmentation.begin(), cs.per_augmentation.end(),
                                 [&](const AugmentationPolynomial& a) { return a.reduced == p; });
    j["polynomials"].push_back(
        {{"poly", poly_to_json(it->chekanov)}, {"reduced", poly_to_json(p)}, {"count", count}});
  }
  return j;
}

std::string report(const FrontDiagram& front, ReportFormat format, std::size_t cap) {
  const Json j = report_json(front, cap);
  if (format == ReportFormat::Json) return j.dump(2) + "\n";
  std::ostringstream out;
  if (!front.name().empty()) out << "name: " << front.name() << "\n";
  out << "tb = " << j["tb"] << ", r = " << j["r"] << ", writhe = " << j["writhe"]
      << ", cusps = " << j["cusps"] << "\n";
  out << "generators:\n";
  for (const auto& g : j["generators"]) {
    out << "  " << g["id"].get<std::string>() << "  " << g["kind"].get<std::string>();
    if (!g["degree"].is_null()) out << "  degree " << g["degree"];
    out << "\n";
  }
  out << "differential:\n";
  for (const auto& [id, words] : j["differential"].items()) {
    out << "  d " << id << " = ";
    if (words.empty()) out << "0";
    for (std::size_t i = 0; i < words.size(); ++i) {
      if (i) out << " + ";
      if (words[i].empty()) out << "1";
      for (std::size_t k = 0; k < words[i].size(); ++k) {
        out << (k ? " " : "") << words[i][k].get<std::string>();
      }
    }
    out << "\n";
  }
  out << "augmentations: " << j["augmentations"] << "\n";
  out << "ch = " << j["ch"] << "\n";
  for (const auto& p : j["polynomials"]) {
    out << "p = " << format_poly(poly_from_json(p["reduced"])) << "\n";
    out << "  P = " << format_poly(poly_from_json(p["poly"])) << ", augmentations: "
        << p["count"] << "\n";
  }
  return out.str();
}

}  // namespace legch
