#include <algorithm>
#include <sstream>

#include "linres/error.hpp"
#include "linres/graph.hpp"
#include "linres/report.hpp"

namespace linres {

namespace {

void add_check(AnalysisReport& r, std::string name, bool mandatory, bool passed, std::string detail = {}) {
  r.checks.push_back({std::move(name), mandatory, passed, std::move(detail)});
}

std::string join(const std::vector<BigInt>& values) {
  std::ostringstream out;
  out << '(';
  for (std::size_t k = 0; k < values.size(); ++k) out << (k ? "," : "") << values[k].get_str();
  out << ')';
  return out.str();
}

std::string first_failure(const VerificationReport& v) {
  for (const auto& e : v.residuals) {
    if (!e.holds()) return e.label + " = " + e.value.get_str() + " (expected " + e.target.get_str() + ")";
  }
  for (const auto& s : v.inequality_slacks) {
    if (!s.holds()) return s.label + " slack " + s.slack.get_str();
  }
  return {};
}

template <typename F>
std::optional<Rational> guarded(F&& compute) {
  try {
    return compute();
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace

bool AnalysisReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.mandatory || c.passed; });
}

std::vector<std::string> AnalysisReport::failed_checks() const {
  std::vector<std::string> out;
  for (const auto& c : checks) {
    if (c.mandatory && !c.passed) out.push_back(c.name);
  }
  return out;
}

AnalysisReport analyze(const ParsedInput& input, const std::string& descriptor, const AnalyzeOptions& options) {
  const UniformHypergraph& h = input.hypergraph;
  const int n = h.n();
  const int m = h.m();
  if (m < 2) {
    throw Error(ErrorKind::BadUniformity, "closed forms need every vertex to be a face, i.e. m >= 2");
  }
  if (options.assert_linear && *options.assert_linear != m) {
    throw Error(ErrorKind::BadParams, "--assert-linear " + std::to_string(*options.assert_linear) +
                                          " does not match the input uniformity " + std::to_string(m));
  }
  if (options.max_n > kHardOracleCap) {
    throw Error(ErrorKind::TooLarge, "oracle cap above the hard limit of " + std::to_string(kHardOracleCap));
  }
  if (options.run_oracle && n > options.max_n) {
    throw Error(ErrorKind::TooLarge, std::to_string(n) + " vertices exceed the oracle cap of " +
                                         std::to_string(options.max_n));
  }
  const OracleOptions oracle_options{options.max_n, 0};

  AnalysisReport r;
  r.input = descriptor;
  r.n = n;
  r.m = m;
  r.edge_count = h.edges().size();
  r.labels = input.labels;
  const bool zero_ideal = h.edges().empty();

  std::optional<GradedBettiTable> table;
  if (m == 2) {
    const Graph g = h.as_graph();
    const Graph gc = complement(g);
    r.graph_chordal = is_chordal(g).chordal;
    r.complement_chordal = is_chordal(gc).chordal;
    r.clique_fvector = clique_fvector_direct(g);
    r.independence_fvector = clique_fvector_direct(gc);
  } else {
    r.independence_fvector = independence_fvector_direct(h);
  }

  if (zero_ideal) {
    r.linearity = "zero-ideal";
  } else if (m == 2 && *r.complement_chordal) {
    r.linearity = "complement-chordal";
  } else if (options.assert_linear) {
    r.linearity = "asserted";
  } else if (m == 2) {
    throw Error(ErrorKind::NotLinear, "the complement graph is not chordal, so the resolution is not linear");
  } else if (n <= options.max_n) {
    table = hochster_graded_betti(h, oracle_options);
    if (!is_linear_table(*table, m)) {
      throw Error(ErrorKind::NotLinear, "the oracle finds Betti numbers off the linear strand");
    }
    r.linearity = "oracle-certified";
  } else {
    throw Error(ErrorKind::NotLinear, "no recognition criterion for m >= 3 beyond the oracle cap; pass --assert-linear");
  }

  const FVector& f = r.independence_fvector;
  std::vector<BigInt> raw;
  if (!zero_ideal) {
    for (long i = 0; i <= n; ++i) raw.push_back(betti_linear_uniform(f, m, i));
  }
  r.betti_formula = raw;
  r.betti = BettiVector({}, m);
  r.krull_dimension = f.dim() + 1;
  r.hilbert_series = hilbert_series_from_fvector(f);

  MultiplicityReport& mult = r.multiplicity;
  mult.defined = r.krull_dimension >= 1;
  if (mult.defined) {
    mult.series_value = multiplicity_from_series(r.hilbert_series);
    mult.top_face_count = f.f(f.dim());
    add_check(r, "multiplicity_equals_top_faces", true, *mult.series_value == *mult.top_face_count);
  }

  // Betti numbers of a minimal resolution are positive up to the
  // projective dimension and zero afterwards.
  if (!zero_ideal) {
    const bool nonnegative = std::all_of(raw.begin(), raw.end(), [](const BigInt& b) { return b >= 0; });
    add_check(r, "betti_nonnegative", true, nonnegative, join(raw));
    if (!nonnegative) {
      // Only reachable when linearity was asserted rather than established.
      if (options.run_oracle) r.oracle = hochster_graded_betti(h, oracle_options);
      return r;
    }
  }
  r.betti = BettiVector(std::vector<BigInt>(raw.begin(), raw.end()), m);
  r.pdim = zero_ideal ? 0 : r.betti.g() + 1;
  if (m >= 3 && !zero_ideal) {
    std::vector<BigInt> offset;
    for (long i = 0; i <= std::max(r.betti.g(), 0); ++i) offset.push_back(betti_linear_uniform_m2_offset(f, m, i));
    r.betti_m2_offset = offset;
  }
  if (!zero_ideal) {
    bool positive = true;
    for (int i = 0; i <= r.betti.g(); ++i) positive = positive && r.betti.values()[i] > 0;
    add_check(r, "betti_positive_through_pdim", true, positive && r.betti.g() >= 0);
  }

  {
    const PureResolutionType shifts = r.betti.ideal_shifts();
    long bad = -1;
    for (long t = 0; t <= kHilbertCheckDegrees && bad < 0; ++t) {
      if (hilbert_function_from_fvector(f, t) != hilbert_function_from_resolution(shifts, r.betti, n, t)) bad = t;
    }
    add_check(r, "hilbert_function_two_ways", true, bad < 0, bad < 0 ? "" : "first mismatch at t=" + std::to_string(bad));
    bad = -1;
    for (long t = 0; t <= kHilbertCheckDegrees && bad < 0; ++t) {
      if (hilbert_function_from_fvector(f, t) != r.hilbert_series.coefficient(t)) bad = t;
    }
    add_check(r, "hilbert_series_expansion", true, bad < 0, bad < 0 ? "" : "first mismatch at t=" + std::to_string(bad));
  }

  if (!zero_ideal) {
    const QuotientResolution q = quotient_resolution(r.betti);
    r.herzog_kuhl = herzog_kuhl_residuals(q.type, q.betti, n - r.krull_dimension);
    add_check(r, "herzog_kuhl_residuals", true, r.herzog_kuhl->all_pass(), first_failure(*r.herzog_kuhl));

    if (mult.defined) {
      mult.pure_formula = guarded([&] { return multiplicity_pure(q.type, q.betti, n); });
      mult.codim_formula = guarded([&] { return multiplicity_pure_codim(q.type, q.betti); });
    }

    if (m == 2 && *r.complement_chordal) {
      // The chordal graph is the complement of the input; its clique
      // complex is the input's independence complex.
      r.chordal_equations = chordal_equation_residuals(f, r.pdim);
      add_check(r, "chordal_equations", true, r.chordal_equations->all_pass(), first_failure(*r.chordal_equations));
      r.chordal_inequalities = chordal_inequality_slacks(f, r.pdim);
      add_check(r, "betti_lower_bound", true, r.chordal_inequalities->all_pass(), first_failure(*r.chordal_inequalities));
      r.chordal_inequalities_ideal_indexed = chordal_inequality_slacks_ideal_indexed(f, r.pdim);
      add_check(r, "betti_lower_bound_ideal_indexed", false, r.chordal_inequalities_ideal_indexed->all_pass(),
                first_failure(*r.chordal_inequalities_ideal_indexed));
      if (mult.defined) mult.chordal_formula = guarded([&] { return multiplicity_chordal(f, r.pdim, n); });
    }

    if (mult.defined) {
      const Rational oracle_e(*mult.series_value);
      add_check(r, "multiplicity_pure_formula_agrees", false, mult.pure_formula && *mult.pure_formula == oracle_e,
                mult.pure_formula ? to_decimal(*mult.pure_formula) : "unavailable");
      add_check(r, "multiplicity_codim_formula_agrees", true, mult.codim_formula && *mult.codim_formula == oracle_e,
                mult.codim_formula ? to_decimal(*mult.codim_formula) : "unavailable");
      if (r.chordal_equations) {
        add_check(r, "multiplicity_chordal_formula_agrees", false,
                  mult.chordal_formula && *mult.chordal_formula == oracle_e,
                  mult.chordal_formula ? to_decimal(*mult.chordal_formula) : "unavailable");
      }
    }
    if (r.betti_m2_offset) {
      std::vector<BigInt> corrected(r.betti.values().begin(), r.betti.values().end());
      corrected.resize(r.betti_m2_offset->size(), 0);
      add_check(r, "m2_offset_formula_agrees", false, corrected == *r.betti_m2_offset, join(*r.betti_m2_offset));
    }
  }

  if (options.run_oracle) {
    if (!table) table = hochster_graded_betti(h, oracle_options);
    r.oracle = table;
    const auto totals = table->totals();
    std::vector<BigInt> expected{1};
    for (const auto& b : r.betti.values()) expected.push_back(b);
    std::vector<BigInt> observed(totals.begin(), totals.end());
    add_check(r, "oracle_betti_totals", true, observed == expected, "oracle " + join(observed));
    add_check(r, "oracle_linear_strand", true, is_linear_table(*table, m));
    add_check(r, "oracle_pdim", true, table->projective_dimension() == r.pdim);
    // The closed form must vanish past the oracle's projective dimension.
    bool vanishes = true;
    for (long i = table->projective_dimension(); i <= n && !zero_ideal; ++i) {
      vanishes = vanishes && betti_linear_uniform(f, m, i) == 0;
    }
    add_check(r, "vanishing_beyond_oracle_pdim", true, vanishes);
  }
  return r;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::TooLarge:
    case ErrorKind::ComplexTooLarge:
      return 3;
    default:
      return 2;
  }
}

}  // namespace linres
