#pragma once

#include "snclab/snc.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace snclab {

using Label = long;

/// Germ  prod_{i in I} x_i = t * det(y_rs, m x m) * prod_j z_j^{a_j}.
struct LocalModel {
    std::vector<Label> x;          ///< I, sorted, distinct
    long m = 0;                    ///< size of the generic determinant
    std::map<Label, long> z;       ///< label -> exponent a_j >= 1
    /// (step, chart) choices from the root, filled in by resolve().
    std::vector<std::pair<std::size_t, std::size_t>> genealogy;

    /// Throws if I is unsorted or repeats, m < 0, an exponent is < 1, or a
    /// label is used both as an x- and a z-divisor.
    void validate() const;

    /// Same germ (genealogy ignored).
    bool same_germ(const LocalModel& other) const { return x == other.x && m == other.m && z == other.z; }
};

struct Mdeg {
    long dx = 0, dy = 0, dz = 0;
    friend auto operator<=>(const Mdeg&, const Mdeg&) = default;
};

Mdeg mdeg(const LocalModel& model);
std::string to_string(const Mdeg& d);

/// mdeg = (1, *, *) or (*, 0, 0).
bool is_resolved(const LocalModel& model);

enum class Rule { Detres, Monres1, Monres2, Monres3, Normalize, Binres };

const char* rule_name(Rule rule);

/// Center data of one rule application.
struct Center {
    std::vector<Label> x;          ///< x-divisors of the center
    std::vector<Label> z;          ///< z-divisors of the center
    bool y = false;                ///< the y-slot is part of the center
    std::optional<Label> fresh;    ///< label of the new exceptional divisor

    std::string describe() const;
};

/// Determinantal blow-up: 2 charts dropping i1 or i2, then m^2 charts with
/// m-1; all gain the fresh divisor with exponent m^2 - 2.
std::vector<LocalModel> step_determinantal(const LocalModel& model, Label i1, Label i2, Label fresh);

enum class MonomialVariant { ExponentAtLeastTwo, Pair, YZPair };

struct MonomialCenter {
    MonomialVariant variant = MonomialVariant::ExponentAtLeastTwo;
    Label i1 = 0, i2 = 0;
    Label j1 = 0;   ///< the z-divisor (the first one for Pair)
    Label j2 = 0;   ///< second z-divisor for Pair
};

/// Monomial blow-ups. ExponentAtLeastTwo needs a fresh label for the
/// exceptional divisor (its exponent a_j - 2 is dropped when zero).
std::vector<LocalModel> step_monomial(const LocalModel& model, const MonomialCenter& center, Label fresh = 0);

/// x_{i_1} ... x_{i_d} = t y: charts (I - i1, 1, {}) and (I, 0, {}).
std::vector<LocalModel> step_mult2(const LocalModel& model, Label i1);

/// A lone z-divisor of exponent 1 with m = 0 becomes the y-slot; any other
/// model is returned unchanged.
LocalModel normalize(const LocalModel& model);

/// The rule the engine applies, by priority; nullopt for resolved models.
std::optional<Rule> select_rule(const LocalModel& model);

/// Replays one rule with recorded center data.
std::vector<LocalModel> apply_rule(Rule rule, const LocalModel& model, const Center& center);

struct ResolutionPolicy {
    /// Permutes center choices when set; otherwise lowest labels win.
    std::optional<std::uint64_t> seed;
    /// Aborts with an error after this many steps.
    std::optional<std::size_t> max_steps;

    /// Reads SNCLAB_SEED.
    static ResolutionPolicy from_environment();
};

/// Maximal faces of the simplicial complex generated by x-index sets.
using Nerve = std::vector<std::vector<Label>>;

Nerve nerve_of(const std::vector<std::vector<Label>>& index_sets);

struct TraceNode {
    LocalModel model;
    std::optional<std::size_t> produced_by;   ///< step index
    std::optional<std::size_t> expanded_by;   ///< step index
    /// mdeg this node answers to in the termination certificate: its own,
    /// except after normalize, where the pre-normalization mdeg is kept.
    Mdeg certified;
};

struct CertificatePair {
    Mdeg parent, child;
    bool decreasing = false;
};

struct TraceStep {
    Rule rule = Rule::Detres;
    std::size_t node = 0;
    Center center;
    std::vector<std::size_t> children;
    std::vector<CertificatePair> certificate;
    /// Nerve of the live leaves after this step.
    Nerve nerve;
};

struct ResolutionTrace {
    std::vector<std::size_t> roots;
    std::vector<TraceNode> nodes;
    std::vector<TraceStep> steps;
    Nerve initial_nerve;

    std::vector<std::size_t> leaves() const;
    bool all_leaves_resolved() const;
    bool certificate_holds() const;
    bool nerve_invariant() const;
};

/// Worklist resolution (first in, first out). Throws on invalid roots, on a
/// failed strict decrease, and when the step limit is exceeded.
ResolutionTrace resolve(const std::vector<LocalModel>& roots, const ResolutionPolicy& policy = {});

/// Re-applies the recorded steps from the node's root.
bool verify_genealogy(const ResolutionTrace& trace, std::size_t node);

/// One root per stratum K and per m with m^2 <= n - |K|, n = dim + 1.
std::vector<LocalModel> embed_snc(const SncModel& model);

/// Every observed (m, codim) has codim = m^2 <= n.
bool validate_determinantal_profile(long n, const std::vector<std::pair<long, long>>& observed);

} // namespace snclab
