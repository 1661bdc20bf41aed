#include "gat/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gat/errors.hpp"
#include "gat/indices.hpp"

namespace gat {

namespace {

constexpr double kBranchTol = 1e-12;    // relative, branch coincidence at boundary alpha
constexpr double kExpOverflow = 700.0;  // |x| beyond which exp(x) leaves double range

struct Context {
    DegreeStats stats;
    double ga1 = 0.0;
    double delta = 0.0;
    double Delta = 0.0;
    double m = 0.0;
    double n = 0.0;
};

Context make_context(const Graph& g) {
    if (g.edge_count() == 0) {
        throw PreconditionError("bound checks require a nonempty edge set");
    }
    if (!is_connected(g)) {
        throw PreconditionError("bound checks require a connected graph");
    }
    Context c;
    c.stats = degree_stats(g);
    c.ga1 = ga1(g);
    c.delta = static_cast<double>(c.stats.delta);
    c.Delta = static_cast<double>(c.stats.Delta);
    c.m = static_cast<double>(c.stats.m);
    c.n = static_cast<double>(c.stats.n);
    return c;
}

bool expected_predicate(EqualityClass c, const DegreeStats& stats) {
    switch (c) {
        case EqualityClass::Regular:
            return stats.is_regular;
        case EqualityClass::EdgeProductConstant:
            return stats.edge_product_constant;
        case EqualityClass::BidegreedExtreme:
            return stats.delta != stats.Delta &&
                   std::all_of(stats.degrees.begin(), stats.degrees.end(), [&](int d) {
                       return d == stats.delta || d == stats.Delta;
                   });
    }
    return false;
}

BoundCheck make_check(TheoremId id, std::optional<double> alpha, std::optional<double> lower,
                      std::optional<double> upper, double value, EqualityClass expected,
                      const DegreeStats& stats, double tol) {
    BoundCheck c;
    c.theorem = id;
    c.alpha = alpha;
    c.lower = lower;
    c.upper = upper;
    c.value = value;
    c.expected_equality = expected;
    c.tol = tol;

    const double window = tol * c.scale();
    c.holds = true;
    if (lower) {
        c.slack_lower = value - *lower;
        c.tight_lower = std::abs(*c.slack_lower) <= window;
        if (*c.slack_lower < -window) c.holds = false;
    }
    if (upper) {
        c.slack_upper = *upper - value;
        c.tight_upper = std::abs(*c.slack_upper) <= window;
        if (*c.slack_upper < -window) c.holds = false;
    }
    c.observed_equality_matches = (expected_predicate(expected, stats) == c.tight_all());
    return c;
}

void require_nonzero_alpha(double alpha) {
    if (alpha == 0.0) throw std::invalid_argument("alpha must be nonzero");
}

// Both branch formulas must agree at a boundary alpha before one is reported.
void assert_branch_coincidence(const char* name, double a, double b) {
    const double scale = std::max({1.0, std::abs(a), std::abs(b)});
    if (std::abs(a - b) > kBranchTol * scale) {
        throw std::logic_error(std::string(name) + ": branch formulas disagree at boundary alpha");
    }
}

// m * NK*^(alpha/m) evaluated in the log domain; nullopt when the exponent
// would overflow double range (not reachable for n <= 62).
std::optional<double> nk_power_term(double m, double log_nk, double alpha) {
    const double exponent = alpha * log_nk / m;
    if (std::abs(exponent) > kExpOverflow) return std::nullopt;
    return m * std::exp(exponent);
}

BoundCheck overflow_skipped(TheoremId id, double alpha, double value, EqualityClass expected,
                            double tol) {
    BoundCheck c;
    c.theorem = id;
    c.alpha = alpha;
    c.value = value;
    c.expected_equality = expected;
    c.tol = tol;
    c.holds = true;
    c.overflow_skip = true;
    return c;
}

BoundCheck t_z1_impl(const Context& c, double alpha, double r_alpha, double tol) {
    double lower, upper;
    if (alpha <= -0.5) {
        lower = std::pow(c.delta, -2.0 * alpha) * r_alpha;
        upper = std::pow(c.Delta, -2.0 * alpha) * r_alpha;
        if (alpha == -0.5) {
            assert_branch_coincidence("t-z1", lower, c.delta * std::pow(c.Delta, -2.0 * alpha - 1.0) * r_alpha);
            assert_branch_coincidence("t-z1", upper, c.Delta * std::pow(c.delta, -2.0 * alpha - 1.0) * r_alpha);
        }
    } else {
        lower = c.delta * std::pow(c.Delta, -2.0 * alpha - 1.0) * r_alpha;
        upper = c.Delta * std::pow(c.delta, -2.0 * alpha - 1.0) * r_alpha;
    }
    return make_check(TheoremId::TZ1, alpha, lower, upper, c.ga1, EqualityClass::Regular,
                      c.stats, tol);
}

BoundCheck t_lb55_impl(const Context& c, double alpha, double r_alpha, double tol) {
    double lower, upper;
    if (alpha <= 0.5) {
        lower = std::pow(c.delta, -2.0 * alpha + 1.0) / c.Delta * r_alpha;
        upper = std::pow(c.Delta, -2.0 * alpha + 1.0) / c.delta * r_alpha;
        if (alpha == 0.5) {
            assert_branch_coincidence("t-lb55", lower, std::pow(c.Delta, -2.0 * alpha) * r_alpha);
            assert_branch_coincidence("t-lb55", upper, std::pow(c.delta, -2.0 * alpha) * r_alpha);
        }
    } else {
        lower = std::pow(c.Delta, -2.0 * alpha) * r_alpha;
        upper = std::pow(c.delta, -2.0 * alpha) * r_alpha;
    }
    return make_check(TheoremId::TLb55, alpha, lower, upper, c.ga1, EqualityClass::Regular,
                      c.stats, tol);
}

double mzz_k_alpha(const Context& c, double alpha) {
    if (alpha <= 1.0) {
        const double k = 2.0 * std::sqrt(c.Delta) * std::pow(c.delta, 1.5) /
                         (c.Delta * c.Delta + c.delta * c.delta);
        if (alpha == 1.0) {
            const double k_high = 2.0 * std::pow(c.Delta, 0.5) * std::pow(c.delta, 1.5) /
                                  (std::pow(c.Delta, 2.0) + std::pow(c.delta, 2.0));
            assert_branch_coincidence("t-mzz", k, k_high);
        }
        return k;
    }
    return 2.0 * std::pow(c.Delta, alpha - 0.5) * std::pow(c.delta, alpha + 0.5) /
           (std::pow(c.Delta, 2.0 * alpha) + std::pow(c.delta, 2.0 * alpha));
}

BoundCheck t_nk3_impl(const Graph& g, const Context& c, double alpha, double tol) {
    const double r_alpha = general_randic(g, alpha);
    const auto lower = nk_power_term(c.m, log_nk_star(g), alpha);
    if (!lower) {
        return overflow_skipped(TheoremId::TNk3, alpha, r_alpha,
                                EqualityClass::EdgeProductConstant, tol);
    }
    return make_check(TheoremId::TNk3, alpha, *lower, std::nullopt, r_alpha,
                      EqualityClass::EdgeProductConstant, c.stats, tol);
}

BoundCheck cor_nk3_impl(const Graph& g, const Context& c, double alpha, double tol) {
    const auto nk_term = nk_power_term(c.m, log_nk_star(g), alpha);
    if (!nk_term) {
        return overflow_skipped(TheoremId::CorNk3, alpha, c.ga1, EqualityClass::Regular, tol);
    }
    double lower;
    if (alpha <= -0.5) {
        lower = std::pow(c.delta, -2.0 * alpha) * *nk_term;
        if (alpha == -0.5) {
            assert_branch_coincidence(
                "cor-nk3", lower, c.delta * std::pow(c.Delta, -2.0 * alpha - 1.0) * *nk_term);
        }
    } else {
        lower = c.delta * std::pow(c.Delta, -2.0 * alpha - 1.0) * *nk_term;
    }
    return make_check(TheoremId::CorNk3, alpha, lower, std::nullopt, c.ga1,
                      EqualityClass::Regular, c.stats, tol);
}

void assert_dominates(const char* what, double should_be_smaller, double should_be_larger) {
    const double fuzz =
        kBranchTol * std::max({1.0, std::abs(should_be_smaller), std::abs(should_be_larger)});
    if (should_be_smaller > should_be_larger + fuzz) {
        throw std::logic_error(std::string("dominance violated: ") + what);
    }
}

}  // namespace

double BoundCheck::scale() const { return std::max(1.0, std::abs(value)); }

bool BoundCheck::tight_all() const {
    if (!lower && !upper) return false;
    return (!lower || tight_lower) && (!upper || tight_upper);
}

std::string theorem_name(TheoremId id) {
    switch (id) {
        case TheoremId::Eq1Known: return "eq1";
        case TheoremId::TEnd2: return "t-end2";
        case TheoremId::TP4bis: return "t-p4bis";
        case TheoremId::TR: return "t-r";
        case TheoremId::TZ1: return "t-z1";
        case TheoremId::CorRandic: return "cor-randic";
        case TheoremId::TLb55: return "t-lb55";
        case TheoremId::TMz: return "t-mz";
        case TheoremId::TMz2: return "t-mz2";
        case TheoremId::TMzz: return "t-mzz";
        case TheoremId::CorMis29: return "cor-mis29";
        case TheoremId::TNk3: return "t-nk3";
        case TheoremId::CorNk3: return "cor-nk3";
        case TheoremId::SThm4Reference: return "s-thm4";
    }
    throw std::logic_error("unknown theorem id");
}

TheoremId theorem_from_name(const std::string& name) {
    for (TheoremId id : {TheoremId::Eq1Known, TheoremId::TEnd2, TheoremId::TP4bis, TheoremId::TR,
                         TheoremId::TZ1, TheoremId::CorRandic, TheoremId::TLb55, TheoremId::TMz,
                         TheoremId::TMz2, TheoremId::TMzz, TheoremId::CorMis29, TheoremId::TNk3,
                         TheoremId::CorNk3, TheoremId::SThm4Reference}) {
        if (theorem_name(id) == name) return id;
    }
    throw std::invalid_argument("unknown theorem name: " + name);
}

bool theorem_takes_alpha(TheoremId id) {
    return id == TheoremId::TZ1 || id == TheoremId::TLb55 || id == TheoremId::TMzz ||
           id == TheoremId::TNk3 || id == TheoremId::CorNk3;
}

std::string equality_class_name(EqualityClass c) {
    switch (c) {
        case EqualityClass::Regular: return "regular";
        case EqualityClass::EdgeProductConstant: return "edge-product-constant";
        case EqualityClass::BidegreedExtreme: return "bidegreed-extreme";
    }
    throw std::logic_error("unknown equality class");
}

BoundCheck check_eq1(const Graph& g, double tol) {
    const Context c = make_context(g);
    const double upper = m1(g) / (2.0 * c.delta);
    return make_check(TheoremId::Eq1Known, std::nullopt, std::nullopt, upper, c.ga1,
                      EqualityClass::Regular, c.stats, tol);
}

BoundCheck check_t_end2(const Graph& g, double tol) {
    const Context c = make_context(g);
    const double m1v = m1(g);
    const double lower = c.delta * m1v / (2.0 * c.Delta * c.Delta);
    const double upper = std::sqrt(c.n * m1v) / 2.0;
    return make_check(TheoremId::TEnd2, std::nullopt, lower, upper, c.ga1,
                      EqualityClass::Regular, c.stats, tol);
}

BoundCheck check_t_p4bis(const Graph& g, double tol) {
    const Context c = make_context(g);
    const double m2v = m2(g);
    const double sum = c.Delta + c.delta;
    const double pairs = c.m * (c.m - 1.0);
    const double lower =
        std::sqrt(sum * sum * m2v + 4.0 * c.Delta * c.Delta * c.Delta * c.delta * pairs) /
        (c.Delta * sum);
    const double upper = std::sqrt(m2v + c.delta * c.delta * pairs) / c.delta;
    return make_check(TheoremId::TP4bis, std::nullopt, lower, upper, c.ga1,
                      EqualityClass::Regular, c.stats, tol);
}

BoundCheck check_t_r(const Graph& g, double tol) {
    const Context c = make_context(g);
    const double value = c.ga1 + c.Delta * randic(g);
    return make_check(TheoremId::TR, std::nullopt, 2.0 * c.m, std::nullopt, value,
                      EqualityClass::Regular, c.stats, tol);
}

BoundCheck check_t_z1(const Graph& g, double alpha, double tol) {
    require_nonzero_alpha(alpha);
    const Context c = make_context(g);
    return t_z1_impl(c, alpha, general_randic(g, alpha), tol);
}

BoundCheck check_cor_randic(const Graph& g, double tol) {
    const Context c = make_context(g);
    const double r = randic(g);
    // This is t-z1 specialized to alpha = -1/2; the two must coincide.
    const BoundCheck z1 = t_z1_impl(c, -0.5, general_randic(g, -0.5), tol);
    assert_branch_coincidence("cor-randic", c.delta * r, *z1.lower);
    assert_branch_coincidence("cor-randic", c.Delta * r, *z1.upper);
    return make_check(TheoremId::CorRandic, std::nullopt, c.delta * r, c.Delta * r, c.ga1,
                      EqualityClass::Regular, c.stats, tol);
}

BoundCheck check_t_lb55(const Graph& g, double alpha, double tol) {
    require_nonzero_alpha(alpha);
    const Context c = make_context(g);
    return t_lb55_impl(c, alpha, general_randic(g, alpha), tol);
}

BoundCheck check_t_mz(const Graph& g, double tol) {
    const Context c = make_context(g);
    const double root = std::sqrt(c.m * general_randic(g, -1.0));
    const double lower =
        2.0 * c.Delta * c.delta * c.delta / (c.Delta * c.Delta + c.delta * c.delta) * root;
    const double upper = c.Delta * root;
    return make_check(TheoremId::TMz, std::nullopt, lower, upper, c.ga1,
                      EqualityClass::Regular, c.stats, tol);
}

BoundCheck check_t_mz2(const Graph& g, double tol) {
    const Context c = make_context(g);
    const double m1v = m1(g);
    const double r_m1 = general_randic(g, -1.0);
    const double dd = c.Delta * c.Delta + c.delta * c.delta;
    const double sum = c.delta + c.Delta;
    const double lower = 4.0 * c.Delta * c.Delta * c.delta * c.delta *
                         std::sqrt(2.0 * c.delta * m1v * r_m1) / (dd * sum * sum);
    const double upper = std::sqrt(2.0 * c.Delta * m1v * r_m1) / 2.0;
    return make_check(TheoremId::TMz2, std::nullopt, lower, upper, c.ga1,
                      EqualityClass::Regular, c.stats, tol);
}

BoundCheck check_t_mzz(const Graph& g, double alpha, double tol) {
    if (!(alpha > 0.0)) throw std::invalid_argument("t-mzz requires alpha > 0");
    const Context c = make_context(g);
    const double root = std::sqrt(general_randic(g, alpha) * general_randic(g, -alpha));
    return make_check(TheoremId::TMzz, alpha, mzz_k_alpha(c, alpha) * root, root, c.ga1,
                      EqualityClass::Regular, c.stats, tol);
}

double s_thm4_reference_lower(const Graph& g) {
    const Context c = make_context(g);
    return 2.0 * c.delta * c.delta / (c.Delta * c.Delta + c.delta * c.delta) *
           std::sqrt(m2(g) * general_randic(g, -1.0));
}

BoundCheck check_cor_mis29(const Graph& g, double tol) {
    const Context c = make_context(g);
    const double prod = m2(g) * general_randic(g, -1.0);
    const double lower = 2.0 * c.delta / (c.Delta * c.Delta + c.delta * c.delta) *
                         std::sqrt(c.delta * c.Delta * prod);
    const double upper = std::sqrt(prod);
    assert_dominates("cor-mis29 lower vs prior bound", s_thm4_reference_lower(g), lower);
    return make_check(TheoremId::CorMis29, std::nullopt, lower, upper, c.ga1,
                      EqualityClass::Regular, c.stats, tol);
}

BoundCheck check_t_nk3(const Graph& g, double alpha, double tol) {
    require_nonzero_alpha(alpha);
    const Context c = make_context(g);
    return t_nk3_impl(g, c, alpha, tol);
}

BoundCheck check_cor_nk3(const Graph& g, double alpha, double tol) {
    require_nonzero_alpha(alpha);
    const Context c = make_context(g);
    return cor_nk3_impl(g, c, alpha, tol);
}

BoundCheck check_one(const Graph& g, TheoremId id, std::optional<double> alpha, double tol) {
    if (theorem_takes_alpha(id) != alpha.has_value()) {
        throw std::invalid_argument(theorem_name(id) +
                                    (alpha ? " does not take an alpha parameter"
                                           : " requires an alpha parameter"));
    }
    switch (id) {
        case TheoremId::Eq1Known: return check_eq1(g, tol);
        case TheoremId::TEnd2: return check_t_end2(g, tol);
        case TheoremId::TP4bis: return check_t_p4bis(g, tol);
        case TheoremId::TR: return check_t_r(g, tol);
        case TheoremId::TZ1: return check_t_z1(g, *alpha, tol);
        case TheoremId::CorRandic: return check_cor_randic(g, tol);
        case TheoremId::TLb55: return check_t_lb55(g, *alpha, tol);
        case TheoremId::TMz: return check_t_mz(g, tol);
        case TheoremId::TMz2: return check_t_mz2(g, tol);
        case TheoremId::TMzz: return check_t_mzz(g, *alpha, tol);
        case TheoremId::CorMis29: return check_cor_mis29(g, tol);
        case TheoremId::TNk3: return check_t_nk3(g, *alpha, tol);
        case TheoremId::CorNk3: return check_cor_nk3(g, *alpha, tol);
        case TheoremId::SThm4Reference: break;
    }
    throw std::invalid_argument("s-thm4 is a reference baseline, not a checkable theorem");
}

std::vector<BoundCheck> check_all(const Graph& g, const std::vector<double>& alphas, double tol) {
    for (double alpha : alphas) require_nonzero_alpha(alpha);
    const Context c = make_context(g);

    std::vector<BoundCheck> checks;
    checks.reserve(8 + 5 * alphas.size());
    checks.push_back(check_eq1(g, tol));
    checks.push_back(check_t_end2(g, tol));
    checks.push_back(check_t_p4bis(g, tol));
    checks.push_back(check_t_r(g, tol));
    checks.push_back(check_cor_randic(g, tol));
    checks.push_back(check_t_mz(g, tol));
    checks.push_back(check_t_mz2(g, tol));
    checks.push_back(check_cor_mis29(g, tol));

    assert_dominates("t-end2 upper vs eq1 upper", *checks[1].upper, *checks[0].upper);

    for (double alpha : alphas) {
        const double r_alpha = general_randic(g, alpha);
        BoundCheck z1 = t_z1_impl(c, alpha, r_alpha, tol);
        BoundCheck lb55 = t_lb55_impl(c, alpha, r_alpha, tol);
        // The sharper theorem's interval sits inside the other's.
        if (alpha < 0.0) {
            assert_dominates("t-lb55 lower vs t-z1 lower (alpha < 0)", *lb55.lower, *z1.lower);
            assert_dominates("t-z1 upper vs t-lb55 upper (alpha < 0)", *z1.upper, *lb55.upper);
        } else {
            assert_dominates("t-z1 lower vs t-lb55 lower (alpha > 0)", *z1.lower, *lb55.lower);
            assert_dominates("t-lb55 upper vs t-z1 upper (alpha > 0)", *lb55.upper, *z1.upper);
        }
        checks.push_back(std::move(z1));
        checks.push_back(std::move(lb55));
        if (alpha > 0.0) checks.push_back(check_t_mzz(g, alpha, tol));
        checks.push_back(t_nk3_impl(g, c, alpha, tol));
        checks.push_back(cor_nk3_impl(g, c, alpha, tol));
    }
    return checks;
}

}  // namespace gat
