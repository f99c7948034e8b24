#include "qplane/catalog.hpp"

#include <algorithm>
#include <stdexcept>

namespace qplane {

namespace {

using Rows = std::vector<std::vector<std::string>>;

const std::map<std::string, SolutionText>& texts() {
  static const std::map<std::string, SolutionText> table{
      {"I",
       {Rows{{"q", "-q^(-1/2)*zeta", "-q^(1/2)*zeta", "q^-1*(q^2-1)^-1*zeta^2*(q^2+1)"},
             {"0", "0", "q", "-q^(-1/2)*zeta"},
             {"0", "q^-1", "0", "q^(-3/2)*zeta"},
             {"0", "0", "0", "q^-1"}},
        Rows{{"(q-1)^-1*zeta", "q^(1/2)"}, {"q^(-1/2)", "0"}},
        Rows{{"1+q", "0", "0", "0"}, {"0", "2", "0", "0"}, {"0", "0", "2", "0"}, {"0", "0", "0", "1+q^-1"}}}},
      {"II",
       {Rows{{"-q^2", "0", "0", "0"}, {"0", "0", "q", "0"}, {"0", "-q^-2", "-1-q^-1", "0"}, {"0", "0", "0", "q^-1"}},
        Rows{{"0", "q^(1/2)"}, {"q^(-1/2)", "0"}},
        std::nullopt}},
      {"III",
       {Rows{{"2*q/(q^2+1)", "0", "0", "(1-q^2)/(q^2+1)"},
             {"0", "(1-q^2)/(q^2+1)", "2*q/(q^2+1)", "0"},
             {"0", "2*q/(q^2+1)", "(q^2-1)/(q^2+1)", "0"},
             {"(q^2-1)/(q^2+1)", "0", "0", "2*q/(q^2+1)"}},
        Rows{{"1", "0"}, {"0", "1"}},
        std::nullopt}},
      // q^-1 R^_{q^-1} with g = eps_{q^-1}
      {"RHAT_PLUS",
       {Rows{{"q^-2", "0", "0", "0"}, {"0", "q^-2-1", "q^-1", "0"}, {"0", "q^-1", "0", "0"}, {"0", "0", "0", "q^-2"}},
        Rows{{"0", "-q^(1/2)"}, {"q^(-1/2)", "0"}},
        std::nullopt}},
      // q (R^_{q^-1})^-1 with g = eps_{q^-1}
      {"RHAT_MINUS",
       {Rows{{"q^2", "0", "0", "0"}, {"0", "0", "q", "0"}, {"0", "q", "q^2-1", "0"}, {"0", "0", "0", "q^2"}},
        Rows{{"0", "-q^(1/2)"}, {"q^(-1/2)", "0"}},
        std::nullopt}},
      {"DEGENERATE",
       {Rows{{"0", "0", "0", "zeta"}, {"0", "-1", "0", "0"}, {"0", "0", "-1", "0"}, {"zeta^-1", "0", "0", "0"}},
        Rows{{"i", "0"}, {"0", "-i*zeta^-1"}},
        Rows{{"1", "0", "0", "zeta"}, {"0", "0", "0", "0"}, {"0", "0", "0", "0"}, {"zeta^-1", "0", "0", "1"}}}},
  };
  return table;
}

ScalarMatrix build(const Rows& rows, const std::optional<ScalarExpr>& zeta) {
  ScalarMatrix m = ScalarMatrix::parse(rows);
  if (zeta) {
    try {
      m = m.substitute(Var::z, *zeta);
    } catch (const DivisionByZero&) {
      throw std::invalid_argument("zeta = " + zeta->to_string() + " makes an entry singular");
    }
  }
  return m;
}

NCElement el(const ScalarExpr& c) { return NCElement(Presentation::uv(), c); }

OneForm th1_times(const NCElement& f) { return {f, NCElement()}; }
OneForm th2_times(const NCElement& f) { return {NCElement(), f}; }

TwoForm th12(const NCElement& f) { return {f}; }

/// c * [[a, b], [c, d]] * form for scalar entries
OneFormMatrix times(const std::array<ScalarExpr, 4>& m, const OneForm& f) {
  OneFormMatrix out = zero_one_forms();
  for (std::size_t k = 0; k < 4; ++k) out[k / 2][k % 2] = el(m[k]) * f;
  return out;
}

TwoFormMatrix times(const std::array<ScalarExpr, 4>& m, const TwoForm& f) {
  TwoFormMatrix out = zero_two_forms();
  for (std::size_t k = 0; k < 4; ++k) out[k / 2][k % 2] = el(m[k]) * f;
  return out;
}

OneFormMatrix add(OneFormMatrix a, const OneFormMatrix& b) {
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) a[i][j] += b[i][j];
  }
  return a;
}

TwoFormMatrix add(TwoFormMatrix a, const TwoFormMatrix& b) {
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) a[i][j] += b[i][j];
  }
  return a;
}

void set_pattern(SolutionEntry& e, std::initializer_list<std::pair<const char*, Expect>> pattern) {
  for (const auto& name : condition_names()) e.expected[name] = Expect::Unspecified;
  for (const auto& [name, value] : pattern) e.expected[name] = value;
}

}  // namespace

std::string_view to_string(Expect e) {
  switch (e) {
    case Expect::Pass:
      return "pass";
    case Expect::Fail:
      return "fail";
    case Expect::Unspecified:
      return "unspecified";
  }
  return "unspecified";
}

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names{"I", "II", "III", "RHAT_PLUS", "RHAT_MINUS", "DEGENERATE"};
  return names;
}

bool catalog_has(const std::string& name) {
  const auto& n = catalog_names();
  return std::find(n.begin(), n.end(), name) != n.end();
}

bool catalog_takes_zeta(const std::string& name) { return name == "I" || name == "DEGENERATE"; }

const SolutionText& catalog_text(const std::string& name) {
  auto it = texts().find(name);
  if (it == texts().end()) throw std::invalid_argument("unknown solution '" + name + "'");
  return it->second;
}

SolutionEntry catalog_entry(const std::string& name, const std::optional<ScalarExpr>& zeta) {
  const SolutionText& text = catalog_text(name);
  const std::optional<ScalarExpr> z = catalog_takes_zeta(name) ? zeta : std::nullopt;
  SolutionEntry e;
  e.name = name;
  e.flip = build(text.flip, z);
  e.metric = build(text.metric, z);
  if (text.tau) e.tau = build(*text.tau, z);

  const ScalarExpr q = ScalarExpr::q();
  const ScalarExpr qi = q.inverse();
  const ScalarExpr zero;
  const ScalarExpr one(1);
  const Calculus& calc = Calculus::uv();
  const OneForm theta = calc.theta();
  const NCElement& l1 = calc.lambda(1);
  const NCElement& l2 = calc.lambda(2);
  const std::array<ScalarExpr, 4> antisym{zero, ScalarExpr(-1), one, zero};

  if (name == "I") {
    const bool at_zero = z && z->is_zero();
    if (at_zero) {
      set_pattern(e, {{"SP", Expect::Pass},
                      {"Pg", Expect::Pass},
                      {"compat", Expect::Pass},
                      {"j-s", Expect::Pass},
                      {"her-f", Expect::Pass},
                      {"braid", Expect::Pass}});
      e.expected_connection = times({1 - q, zero, zero, -(1 - q) * qi}, theta);
      e.expected_curvature = zero_two_forms();
      e.expected_curvature_limit = ScalarMatrix(2, 2);
    } else {
      set_pattern(e, {{"SP", Expect::Pass},
                      {"Pg", Expect::Pass},
                      {"compat", Expect::Pass},
                      {"her-f", Expect::Fail},
                      {"braid", Expect::Fail}});
    }
    // P(1 + S) != 0 off zeta = 0, so no T exists there
    e.expected["tau"] = at_zero ? Expect::Pass : Expect::Fail;
    if (at_zero) e.tau_invertible = true;
  } else if (name == "II") {
    set_pattern(e, {{"SP", Expect::Pass},
                    {"Pg", Expect::Pass},
                    {"compat", Expect::Pass},
                    {"j-s", Expect::Pass},
                    {"her-f", Expect::Fail},
                    {"braid", Expect::Fail}});
    e.expected_connection = add(add(times({1 + q * q, zero, zero, (1 + q * q) * q.pow(-2)}, theta),
                                    times({zero, zero, -(1 + qi), zero}, th2_times(l1))),
                                times({(q + 1) * q, zero, zero, (q + 1) * q.pow(-2)}, th2_times(l2)));
    const ScalarExpr c = -(q * q - 1) * q.pow(-3) * (1 + q + q * q);
    e.expected_curvature = times({zero, zero, c, zero}, th12(l1 * l1));
    e.curvature_limit_diverges = true;
  } else if (name == "III") {
    set_pattern(e, {{"SP", Expect::Pass},
                    {"Pg", Expect::Pass},
                    {"compat", Expect::Pass},
                    {"j-s", Expect::Pass},
                    {"her-f", Expect::Fail},
                    {"braid", Expect::Fail}});
    const ScalarExpr n = (q * q + 1).inverse();
    const ScalarExpr a = (q - 1).pow(2) * n;
    const ScalarExpr b = (q * q - 1) * n;
    std::array<ScalarExpr, 4> anti_b{};
    for (std::size_t k = 0; k < 4; ++k) anti_b[k] = b * antisym[k];
    e.expected_connection = add(times({a, zero, zero, a}, theta), times(anti_b, th1_times(l2) + th2_times(l1)));
    const ScalarExpr pre = (q * q - 1) * n * n;
    const ScalarExpr diag = -pre * qi * (q * q - 1).pow(2);
    std::array<ScalarExpr, 4> anti_c{};
    for (std::size_t k = 0; k < 4; ++k) anti_c[k] = pre * 2 * (q - 1) * antisym[k];
    e.expected_curvature = add(times({diag, zero, zero, diag}, th12(l1 * l2)), times(anti_c, th12(l1 * l1 + l2 * l2)));
    const ScalarExpr u = ScalarExpr::var(Var::u);
    const ScalarExpr v = ScalarExpr::var(Var::v);
    const ScalarExpr s = u.pow(-2) + v.pow(-2);
    e.expected_curvature_limit = ScalarMatrix(2, 2, {zero, -s, s, zero});
  } else if (name == "RHAT_PLUS" || name == "RHAT_MINUS") {
    set_pattern(e, {{"SP", Expect::Pass},
                    {"Pg", Expect::Fail},
                    {"compat", Expect::Fail},
                    {"j-s", Expect::Pass},
                    {"her-f", Expect::Pass},
                    {"braid", Expect::Pass}});
    e.expected_curvature = zero_two_forms();
    e.expected_curvature_limit = ScalarMatrix(2, 2);
  } else if (name == "DEGENERATE") {
    set_pattern(e, {{"SP", Expect::Pass}, {"Pg", Expect::Pass}, {"braid", Expect::Pass}});
    e.expected["tau"] = Expect::Pass;
    e.tau_invertible = false;
    const ScalarExpr zv = z.value_or(ScalarExpr::zeta());
    e.expected_connection =
        add(times({one, zero, zero, one}, theta),
            times({zero, one, -zv.inverse(), zero}, th2_times(l1.scaled(zv)) - th1_times(l2)));
    e.expected_curvature = times({qi * (q * q - 1), zero, zero, qi * (q * q - 1)}, th12(l1 * l2));
    e.curvature_limit_diverges = true;
  }
  return e;
}

}  // namespace qplane
