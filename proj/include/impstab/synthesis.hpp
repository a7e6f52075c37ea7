#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "impstab/control_space.hpp"
#include "impstab/probe.hpp"

namespace impstab {

struct CostEvaluationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr const char* kProbeSpaceMessage =
    "Unconstrained problem is provably feasible. Performing optimization in probe space.";
inline constexpr const char* kControlSpaceMessage = "Performing optimization in control space.";
inline constexpr const char* kFeasibleMessage = "Local minimum found that satisfies the constraints.";
inline constexpr const char* kInfeasibleMessage = "Converged to an infeasible point.";
inline constexpr const char* kBudgetMessage = "Solver stopped prematurely.";

enum class SearchSpace {
    automatic,  // probe-space reduction when provably feasible, else coordinate search
    control,    // always search basis coordinates directly
};

/// Deterministic compass pattern search over an escalating quadratic-penalty
/// objective; all defaults are part of the artifact contract.
struct SolverSettings {
    std::uint64_t seed = 1;
    int starts = 8;
    long max_evaluations = 100000;  // objective evaluations per start
    double mesh_init = 0.5;
    double mesh_floor = 1e-9;
    double feas_tol = 1e-8;
    double mu_init = 1e2;
    double mu_max = 1e12;
    SearchSpace search_space = SearchSpace::automatic;
};

struct SynthesisProblem {
    double h = 1.0;
    double gamma = 0.0;
    Eigen::MatrixXd cost_weight;  // k x k symmetric positive-definite; empty means identity
    std::function<double(const Eigen::VectorXd&)> cost_general;  // optional additive cost
    std::optional<Eigen::VectorXd> guess;
    SolverSettings solver;

    double rho_target() const { return std::exp(gamma * h_inv()); }
    double h_inv() const { return 1.0 / h; }
};

struct SolverReport {
    long iterations = 0;
    long evaluations = 0;
    std::string termination;  // "converged", "budget" or "infeasible"
    bool probe_space = false;
    int start_index = -1;
    double mu_final = 0.0;
    std::vector<std::string> messages;
};

struct Controller {
    Eigen::VectorXd coords;
    Eigen::MatrixXd matrix;
    double cost = 0.0;
    double rho = 0.0;
    double margin = 0.0;
    bool feasible = false;
    SolverReport report;
};

struct FeasibilityResult {
    double rho = 0.0;
    double margin = 0.0;
    Eigen::VectorXd constraint_values;  // empty when unconstrained
};

struct VerifyReport {
    bool ok = true;
    double max_mismatch = 0.0;
    std::vector<std::string> mismatches;
};

/// x^T W x + C(x), with C identically zero when absent.
double evaluate_cost(const Eigen::VectorXd& x, const SynthesisProblem& problem);

/// Spectral radius, margin against the target rate, and constraint values at x.
FeasibilityResult feasibility(const Eigen::VectorXd& x, const ProbeData& probe,
                              const SynthesisProblem& problem, const ConstraintFn& constraint = {});

/// Minimize the cost subject to rho(M(B)) <= exp(gamma/h) and c(B) <= 0 over
/// the control space. Returns the best controller found; when no feasible
/// point is found the controller carries feasible = false and the report says
/// why.
Controller synthesize(const ProbeData& probe, const ControlSpace& space,
                      const SynthesisProblem& problem);

/// Recomputes every stored controller field from scratch and flags mismatches
/// above 1e-10.
VerifyReport verify_controller(const ProbeData& probe, const ControlSpace& space,
                               const SynthesisProblem& problem, const Controller& controller);

}  // namespace impstab
