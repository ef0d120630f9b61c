#include "linres/report.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "linres/error.hpp"

namespace linres {

namespace {

Json big_array(const std::vector<BigInt>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(to_decimal(v));
  return out;
}

std::vector<BigInt> big_array_from(const Json& j) {
  std::vector<BigInt> out;
  for (const auto& v : j) out.push_back(bigint_from_decimal(v.get<std::string>()));
  return out;
}

template <typename T, typename F>
Json optional_json(const std::optional<T>& value, F&& convert) {
  return value ? convert(*value) : Json(nullptr);
}

template <typename T, typename F>
std::optional<T> optional_from(const Json& j, const char* key, F&& convert) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return convert(j.at(key));
}

Json rational_json(const Rational& q) { return to_decimal(q); }
Rational rational_from(const Json& j) { return rational_from_decimal(j.get<std::string>()); }
Json big_json(const BigInt& b) { return to_decimal(b); }
BigInt big_from(const Json& j) { return bigint_from_decimal(j.get<std::string>()); }

// Conventions the numbers in a report depend on.
Json conventions_json() {
  Json c;
  c["betti_index"] = "ideal: beta_0 counts generators; module sequence is (1, beta_0, beta_1, ...)";
  c["betti_lower_bound"] = "module-indexed, beta'_i >= C(p, i) for i = 0..p; ideal-indexed reading informational";
  c["chordal_euler_target"] = "1";
  c["hilbert_function"] = "per-degree monomial counts C(t + n - 1, n - 1)";
  c["uniform_binomial"] = "C(f_0 - m - j + 1, i - j + 1)";
  return c;
}

}  // namespace

Json fvector_to_json(const FVector& f) {
  Json j;
  j["f"] = big_array(f.counts());
  j["dim"] = f.dim();
  return j;
}

FVector fvector_from_json(const Json& j) {
  FVector f(big_array_from(j.at("f")));
  if (f.dim() != j.at("dim").get<int>()) throw Error(ErrorKind::ParseError, "f-vector dimension mismatch");
  return f;
}

Json series_to_json(const HilbertSeries& hs) {
  Json j;
  j["numerator"] = big_array(hs.numerator.coefficients());
  j["denom_exponent"] = hs.denom_exponent;
  return j;
}

HilbertSeries series_from_json(const Json& j) {
  return HilbertSeries{IntPolynomial(big_array_from(j.at("numerator"))), j.at("denom_exponent").get<int>()};
}

Json verification_to_json(const VerificationReport& r) {
  Json j;
  j["all_pass"] = r.all_pass();
  Json eqs = Json::array();
  for (const auto& e : r.residuals) {
    eqs.push_back({{"label", e.label}, {"value", to_decimal(e.value)}, {"target", to_decimal(e.target)}});
  }
  j["equations"] = std::move(eqs);
  Json ineqs = Json::array();
  for (const auto& s : r.inequality_slacks) ineqs.push_back({{"label", s.label}, {"slack", to_decimal(s.slack)}});
  j["inequalities"] = std::move(ineqs);
  return j;
}

VerificationReport verification_from_json(const Json& j) {
  VerificationReport r;
  for (const auto& e : j.at("equations")) {
    r.residuals.push_back({e.at("label").get<std::string>(), big_from(e.at("value")), big_from(e.at("target"))});
  }
  for (const auto& s : j.at("inequalities")) {
    r.inequality_slacks.push_back({s.at("label").get<std::string>(), big_from(s.at("slack"))});
  }
  return r;
}

Json table_to_json(const GradedBettiTable& t) {
  Json j;
  j["n"] = t.n;
  Json entries = Json::array();
  for (const auto& [key, value] : t.entries) {
    if (value == 0) continue;
    entries.push_back({{"i", key.first}, {"j", key.second}, {"beta", std::to_string(value)}});
  }
  j["entries"] = std::move(entries);
  j["totals"] = Json::array();
  for (auto v : t.totals()) j["totals"].push_back(std::to_string(v));
  return j;
}

GradedBettiTable table_from_json(const Json& j) {
  GradedBettiTable t;
  t.n = j.at("n").get<int>();
  for (const auto& e : j.at("entries")) {
    t.entries[{e.at("i").get<int>(), e.at("j").get<int>()}] = std::stoll(e.at("beta").get<std::string>());
  }
  return t;
}

Json to_json(const AnalysisReport& r) {
  Json j;
  j["schema"] = r.schema;
  j["input"] = r.input;
  j["n"] = r.n;
  j["m"] = r.m;
  j["edge_count"] = r.edge_count;
  j["labels"] = r.labels;
  j["linearity"] = r.linearity;
  j["conventions"] = conventions_json();
  j["graph_chordal"] = optional_json(r.graph_chordal, [](bool b) { return Json(b); });
  j["complement_chordal"] = optional_json(r.complement_chordal, [](bool b) { return Json(b); });
  j["clique_fvector"] = optional_json(r.clique_fvector, fvector_to_json);
  j["independence_fvector"] = fvector_to_json(r.independence_fvector);
  j["betti_formula"] = big_array(r.betti_formula);
  j["betti"] = big_array(r.betti.values());
  j["betti_module"] = big_array([&] {
    std::vector<BigInt> module{1};
    module.insert(module.end(), r.betti.values().begin(), r.betti.values().end());
    return module;
  }());
  j["betti_m2_offset"] = optional_json(r.betti_m2_offset, big_array);
  j["pdim"] = r.pdim;
  j["krull_dimension"] = r.krull_dimension;
  j["hilbert_series"] = series_to_json(r.hilbert_series);

  Json mult;
  mult["defined"] = r.multiplicity.defined;
  mult["series_value"] = optional_json(r.multiplicity.series_value, big_json);
  mult["top_face_count"] = optional_json(r.multiplicity.top_face_count, big_json);
  mult["pure_formula"] = optional_json(r.multiplicity.pure_formula, rational_json);
  mult["codim_formula"] = optional_json(r.multiplicity.codim_formula, rational_json);
  mult["chordal_formula"] = optional_json(r.multiplicity.chordal_formula, rational_json);
  j["multiplicity"] = std::move(mult);

  j["herzog_kuhl"] = optional_json(r.herzog_kuhl, verification_to_json);
  j["chordal_equations"] = optional_json(r.chordal_equations, verification_to_json);
  j["chordal_inequalities"] = optional_json(r.chordal_inequalities, verification_to_json);
  j["chordal_inequalities_ideal_indexed"] = optional_json(r.chordal_inequalities_ideal_indexed, verification_to_json);
  j["oracle"] = optional_json(r.oracle, table_to_json);

  Json checks = Json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name}, {"mandatory", c.mandatory}, {"passed", c.passed}, {"detail", c.detail}});
  }
  j["checks"] = std::move(checks);
  j["passed"] = r.passed();
  return j;
}

AnalysisReport report_from_json(const Json& j) {
  AnalysisReport r;
  r.schema = j.at("schema").get<int>();
  if (r.schema != kSchemaVersion) throw Error(ErrorKind::ParseError, "unsupported schema " + std::to_string(r.schema));
  r.input = j.at("input").get<std::string>();
  r.n = j.at("n").get<int>();
  r.m = j.at("m").get<int>();
  r.edge_count = j.at("edge_count").get<std::size_t>();
  r.labels = j.at("labels").get<std::vector<std::string>>();
  r.linearity = j.at("linearity").get<std::string>();
  r.graph_chordal = optional_from<bool>(j, "graph_chordal", [](const Json& v) { return v.get<bool>(); });
  r.complement_chordal = optional_from<bool>(j, "complement_chordal", [](const Json& v) { return v.get<bool>(); });
  r.clique_fvector = optional_from<FVector>(j, "clique_fvector", fvector_from_json);
  r.independence_fvector = fvector_from_json(j.at("independence_fvector"));
  r.betti_formula = big_array_from(j.at("betti_formula"));
  r.betti = BettiVector(big_array_from(j.at("betti")), r.m);
  r.betti_m2_offset = optional_from<std::vector<BigInt>>(j, "betti_m2_offset", big_array_from);
  r.pdim = j.at("pdim").get<int>();
  r.krull_dimension = j.at("krull_dimension").get<int>();
  r.hilbert_series = series_from_json(j.at("hilbert_series"));

  const Json& mult = j.at("multiplicity");
  r.multiplicity.defined = mult.at("defined").get<bool>();
  r.multiplicity.series_value = optional_from<BigInt>(mult, "series_value", big_from);
  r.multiplicity.top_face_count = optional_from<BigInt>(mult, "top_face_count", big_from);
  r.multiplicity.pure_formula = optional_from<Rational>(mult, "pure_formula", rational_from);
  r.multiplicity.codim_formula = optional_from<Rational>(mult, "codim_formula", rational_from);
  r.multiplicity.chordal_formula = optional_from<Rational>(mult, "chordal_formula", rational_from);

  r.herzog_kuhl = optional_from<VerificationReport>(j, "herzog_kuhl", verification_from_json);
  r.chordal_equations = optional_from<VerificationReport>(j, "chordal_equations", verification_from_json);
  r.chordal_inequalities = optional_from<VerificationReport>(j, "chordal_inequalities", verification_from_json);
  r.chordal_inequalities_ideal_indexed =
      optional_from<VerificationReport>(j, "chordal_inequalities_ideal_indexed", verification_from_json);
  r.oracle = optional_from<GradedBettiTable>(j, "oracle", table_from_json);

  for (const auto& c : j.at("checks")) {
    r.checks.push_back({c.at("name").get<std::string>(), c.at("mandatory").get<bool>(), c.at("passed").get<bool>(),
                        c.at("detail").get<std::string>()});
  }
  return r;
}

std::string render_json(const AnalysisReport& report) { return to_json(report).dump(2) + "\n"; }

std::string render_betti_table(const BettiVector& betti) {
  std::vector<std::string> cells{"1"};
  for (const auto& b : betti.values()) cells.push_back(to_decimal(b));
  std::size_t width = 3;
  for (const auto& c : cells) width = std::max(width, c.size());
  ++width;

  std::ostringstream out;
  auto row = [&](const std::string& head, auto cell) {
    out << std::left << std::setw(12) << head;
    for (std::size_t k = 0; k < cells.size(); ++k) out << std::right << std::setw(static_cast<int>(width)) << cell(k);
    out << '\n';
  };
  row("module i", [](std::size_t k) { return std::to_string(k); });
  row("ideal i", [](std::size_t k) { return k == 0 ? std::string("-") : std::to_string(k - 1); });
  row("total", [&](std::size_t k) { return cells[k]; });
  // Row r holds beta_{i, i + r}; a linear resolution fills row 0 with the
  // leading 1 and row m - 1 with everything else.
  row("0:", [&](std::size_t k) { return k == 0 ? cells[0] : std::string("-"); });
  if (!betti.is_zero_ideal()) {
    row(std::to_string(betti.m() - 1) + ":", [&](std::size_t k) { return k == 0 ? std::string("-") : cells[k]; });
  }
  return out.str();
}

std::string render_text(const AnalysisReport& r) {
  std::ostringstream out;
  auto fv = [](const FVector& f) {
    std::string s = "(";
    for (std::size_t k = 0; k < f.counts().size(); ++k) s += (k ? ", " : "") + to_decimal(f.counts()[k]);
    return s + ")";
  };
  out << "input: " << r.input << '\n';
  out << "vertices: " << r.n << "  uniformity: " << r.m << "  edges: " << r.edge_count << '\n';
  out << "linearity: " << r.linearity << '\n';
  if (r.graph_chordal) out << "graph chordal: " << (*r.graph_chordal ? "yes" : "no") << '\n';
  if (r.complement_chordal) out << "complement chordal: " << (*r.complement_chordal ? "yes" : "no") << '\n';
  if (r.clique_fvector) out << "clique f-vector: " << fv(*r.clique_fvector) << '\n';
  out << "independence f-vector: " << fv(r.independence_fvector) << '\n';
  out << "pdim(R/I): " << r.pdim << "  Krull dimension: " << r.krull_dimension << '\n';
  out << "\n" << render_betti_table(r.betti) << '\n';

  out << "Hilbert series numerator: (";
  const auto& p = r.hilbert_series.numerator.coefficients();
  for (std::size_t k = 0; k < p.size(); ++k) out << (k ? ", " : "") << to_decimal(p[k]);
  out << ") / (1 - z)^" << r.hilbert_series.denom_exponent << '\n';
  const auto& mult = r.multiplicity;
  if (mult.defined) {
    out << "multiplicity: " << to_decimal(*mult.series_value) << " (top faces " << to_decimal(*mult.top_face_count)
        << ")\n";
    auto show = [&](const char* name, const std::optional<Rational>& v) {
      out << "  " << name << ": " << (v ? to_decimal(*v) : std::string("n/a")) << '\n';
    };
    show("pure formula", mult.pure_formula);
    show("codimension formula", mult.codim_formula);
    if (r.chordal_equations) show("chordal formula", mult.chordal_formula);
  } else {
    out << "multiplicity: undefined (Krull dimension 0)\n";
  }
  if (r.oracle) {
    out << "\noracle graded Betti numbers (i, j): ";
    bool first = true;
    for (const auto& [key, value] : r.oracle->entries) {
      if (value == 0) continue;
      out << (first ? "" : ", ") << "b(" << key.first << "," << key.second << ")=" << value;
      first = false;
    }
    out << '\n';
  }

  out << "\nchecks:\n";
  for (const auto& c : r.checks) {
    out << "  " << (c.passed ? "PASS" : "FAIL") << (c.mandatory ? "  " : " (info) ") << c.name;
    if (!c.detail.empty()) out << "  " << c.detail;
    out << '\n';
  }
  out << (r.passed() ? "result: PASS\n" : "result: FAIL\n");
  return out.str();
}

int VerifySummary::exit_code() const {
  int code = 0;
  for (const auto& e : entries) {
    switch (e.status) {
      case EntryStatus::Pass:
      case EntryStatus::NotLinear:
        break;
      case EntryStatus::Fail:
        code = std::max(code, 1);
        break;
      case EntryStatus::InputError:
        code = std::max(code, 2);
        break;
      case EntryStatus::TooLarge:
        code = std::max(code, 3);
        break;
    }
  }
  return code;
}

VerifySummary verify_corpus(const std::filesystem::path& directory, const AnalyzeOptions& options) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(directory)) {
    throw Error(ErrorKind::InvalidInput, "not a directory: " + directory.string());
  }
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(directory)) {
    if (entry.is_regular_file()) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());

  VerifySummary summary;
  if (files.empty()) summary.warnings.push_back("no input files in " + directory.string());
  for (const auto& path : files) {
    VerifyEntry entry;
    entry.file = path.filename().string();
    try {
      const AnalysisReport r = analyze(read_input_file(path), entry.file, options);
      entry.failed_checks = r.failed_checks();
      entry.status = entry.failed_checks.empty() ? EntryStatus::Pass : EntryStatus::Fail;
    } catch (const Error& e) {
      entry.message = e.what();
      switch (e.kind()) {
        case ErrorKind::NotLinear:
          entry.status = EntryStatus::NotLinear;
          break;
        case ErrorKind::TooLarge:
        case ErrorKind::ComplexTooLarge:
          entry.status = EntryStatus::TooLarge;
          break;
        default:
          entry.status = EntryStatus::InputError;
      }
    }
    summary.entries.push_back(std::move(entry));
  }
  return summary;
}

Json to_json(const VerifySummary& summary) {
  static const char* names[] = {"pass", "fail", "not-linear", "input-error", "too-large"};
  Json j;
  j["schema"] = kSchemaVersion;
  Json entries = Json::array();
  std::map<std::string, int> counts;
  for (const auto& e : summary.entries) {
    const std::string status = names[static_cast<int>(e.status)];
    ++counts[status];
    entries.push_back({{"file", e.file}, {"status", status}, {"failed_checks", e.failed_checks}, {"message", e.message}});
  }
  j["entries"] = std::move(entries);
  Json c;
  for (const char* name : names) c[name] = counts[name];
  j["counts"] = std::move(c);
  j["warnings"] = summary.warnings;
  j["exit_code"] = summary.exit_code();
  return j;
}

}  // namespace linres
