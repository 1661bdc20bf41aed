#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gat/graph.hpp"

namespace gat {

// One identifier per inequality family. SThm4Reference is the previously
// published bound that CorMis29 improves on; it only serves as a dominance
// baseline and is never emitted as a check of its own.
enum class TheoremId {
    Eq1Known,
    TEnd2,
    TP4bis,
    TR,
    TZ1,
    CorRandic,
    TLb55,
    TMz,
    TMz2,
    TMzz,
    CorMis29,
    TNk3,
    CorNk3,
    SThm4Reference,
};

std::string theorem_name(TheoremId id);
TheoremId theorem_from_name(const std::string& name);
bool theorem_takes_alpha(TheoremId id);

// Graph family on which a bound is expected to be tight.
enum class EqualityClass { Regular, EdgeProductConstant, BidegreedExtreme };

std::string equality_class_name(EqualityClass c);

constexpr double kDefaultTol = 1e-9;

// Result of evaluating one inequality on one graph. "value" is the bounded
// quantity: GA1 everywhere except TNk3, where it is R_alpha. Slacks are
// signed so that nonnegative means the inequality holds; tightness means a
// slack within tol * max(1, |value|) of zero.
struct BoundCheck {
    TheoremId theorem = TheoremId::Eq1Known;
    std::optional<double> alpha;
    std::optional<double> lower;
    std::optional<double> upper;
    double value = 0.0;
    std::optional<double> slack_lower;  // value - lower
    std::optional<double> slack_upper;  // upper - value
    bool holds = false;
    bool tight_lower = false;
    bool tight_upper = false;
    EqualityClass expected_equality = EqualityClass::Regular;
    std::optional<bool> observed_equality_matches;
    bool overflow_skip = false;  // NK* exponent left double range (needs n > 62)
    double tol = kDefaultTol;

    double scale() const;
    // Conjunction of tightness over the finite sides.
    bool tight_all() const;
};

// Each check requires a connected graph with at least one edge (hence
// minimum degree >= 1) and throws PreconditionError otherwise.
BoundCheck check_eq1(const Graph& g, double tol = kDefaultTol);
BoundCheck check_t_end2(const Graph& g, double tol = kDefaultTol);
BoundCheck check_t_p4bis(const Graph& g, double tol = kDefaultTol);
BoundCheck check_t_r(const Graph& g, double tol = kDefaultTol);
BoundCheck check_t_z1(const Graph& g, double alpha, double tol = kDefaultTol);
BoundCheck check_cor_randic(const Graph& g, double tol = kDefaultTol);
BoundCheck check_t_lb55(const Graph& g, double alpha, double tol = kDefaultTol);
BoundCheck check_t_mz(const Graph& g, double tol = kDefaultTol);
BoundCheck check_t_mz2(const Graph& g, double tol = kDefaultTol);
BoundCheck check_t_mzz(const Graph& g, double alpha, double tol = kDefaultTol);  // alpha > 0
BoundCheck check_cor_mis29(const Graph& g, double tol = kDefaultTol);
BoundCheck check_t_nk3(const Graph& g, double alpha, double tol = kDefaultTol);
BoundCheck check_cor_nk3(const Graph& g, double alpha, double tol = kDefaultTol);

// The prior lower bound that check_cor_mis29 must dominate.
double s_thm4_reference_lower(const Graph& g);

// Runs every check once, the parameterized ones per alpha (TMzz only for
// alpha > 0), and verifies the cross-bound dominance relations: the TEnd2
// upper never exceeds the Eq1 upper, and between TZ1 and TLb55 the interval
// of the sharper theorem (TZ1 for alpha < 0, TLb55 for alpha > 0) is
// contained in the other's.
std::vector<BoundCheck> check_all(const Graph& g, const std::vector<double>& alphas,
                                  double tol = kDefaultTol);

// Evaluate a single theorem by id (used by the extremal search and the CLI).
BoundCheck check_one(const Graph& g, TheoremId id, std::optional<double> alpha,
                     double tol = kDefaultTol);

}  // namespace gat
