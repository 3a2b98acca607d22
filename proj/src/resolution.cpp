#include "snclab/resolution.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <random>
#include <set>

namespace snclab {

namespace {

bool has_x(const LocalModel& m, Label i) { return std::binary_search(m.x.begin(), m.x.end(), i); }

LocalModel without_x(LocalModel m, Label i)
{
    m.x.erase(std::find(m.x.begin(), m.x.end(), i));
    return m;
}

LocalModel with_z(LocalModel m, Label j, long exponent)
{
    if (exponent > 0)
        m.z[j] += exponent;
    return m;
}

LocalModel germ_only(const LocalModel& m)
{
    LocalModel g = m;
    g.genealogy.clear();
    return g;
}

void require_pair(const LocalModel& m, Label i1, Label i2)
{
    if (i1 == i2 || !has_x(m, i1) || !has_x(m, i2))
        throw Error("center pair (" + std::to_string(i1) + "," + std::to_string(i2) + ") is not two distinct x-labels");
}

long z_exponent(const LocalModel& m, Label j)
{
    auto it = m.z.find(j);
    if (it == m.z.end())
        throw Error("unknown z-label " + std::to_string(j));
    return it->second;
}

std::string list(const std::vector<Label>& v)
{
    std::string s;
    for (std::size_t k = 0; k < v.size(); ++k)
        s += (k ? "," : "") + std::to_string(v[k]);
    return s;
}

} // namespace

void LocalModel::validate() const
{
    for (std::size_t k = 1; k < x.size(); ++k)
        if (x[k - 1] >= x[k])
            throw Error("x-labels must be strictly increasing");
    if (m < 0)
        throw Error("negative determinant size");
    for (const auto& [j, a] : z) {
        if (a < 1)
            throw Error("z-label " + std::to_string(j) + " has exponent " + std::to_string(a) + " < 1");
        if (std::binary_search(x.begin(), x.end(), j))
            throw Error("label " + std::to_string(j) + " used as both x- and z-divisor");
    }
}

Mdeg mdeg(const LocalModel& model)
{
    Mdeg d{static_cast<long>(model.x.size()), model.m, 0};
    for (const auto& [j, a] : model.z)
        d.dz += a;
    return d;
}

std::string to_string(const Mdeg& d)
{
    return "(" + std::to_string(d.dx) + "," + std::to_string(d.dy) + "," + std::to_string(d.dz) + ")";
}

bool is_resolved(const LocalModel& model)
{
    auto d = mdeg(model);
    return d.dx <= 1 || (d.dy == 0 && d.dz == 0);
}

const char* rule_name(Rule rule)
{
    switch (rule) {
    case Rule::Detres: return "detres";
    case Rule::Monres1: return "monres-1";
    case Rule::Monres2: return "monres-2";
    case Rule::Monres3: return "monres-3";
    case Rule::Normalize: return "normalize";
    case Rule::Binres: return "binres";
    }
    return "?";
}

std::string Center::describe() const
{
    std::string s = "x{" + list(x) + "}";
    if (y)
        s += " y";
    if (!z.empty())
        s += " z{" + list(z) + "}";
    if (fresh)
        s += " new " + std::to_string(*fresh);
    return s;
}

std::vector<LocalModel> step_determinantal(const LocalModel& model, Label i1, Label i2, Label fresh)
{
    if (model.m < 2)
        throw Error("determinantal step needs m >= 2, got m = " + std::to_string(model.m));
    require_pair(model, i1, i2);
    if (has_x(model, fresh) || model.z.count(fresh))
        throw Error("fresh label " + std::to_string(fresh) + " is already in use");
    const long e = model.m * model.m - 2;
    auto base = germ_only(model);
    std::vector<LocalModel> out;
    out.push_back(with_z(without_x(base, i1), fresh, e));
    out.push_back(with_z(without_x(base, i2), fresh, e));
    auto lower = base;
    lower.m -= 1;
    lower = with_z(lower, fresh, e);
    for (long k = 0; k < model.m * model.m; ++k)
        out.push_back(lower);
    return out;
}

std::vector<LocalModel> step_monomial(const LocalModel& model, const MonomialCenter& c, Label fresh)
{
    require_pair(model, c.i1, c.i2);
    auto base = germ_only(model);
    std::vector<LocalModel> out;
    switch (c.variant) {
    case MonomialVariant::ExponentAtLeastTwo: {
        const long a = z_exponent(model, c.j1);
        if (a < 2)
            throw Error("monomial step (exponent >= 2) needs a_j >= 2, got " + std::to_string(a));
        if (has_x(model, fresh) || model.z.count(fresh))
            throw Error("fresh label " + std::to_string(fresh) + " is already in use");
        out.push_back(with_z(without_x(base, c.i1), fresh, a - 2));
        out.push_back(with_z(without_x(base, c.i2), fresh, a - 2));
        auto zc = base;
        zc.z.erase(c.j1);
        out.push_back(with_z(zc, fresh, a - 2));
        break;
    }
    case MonomialVariant::Pair: {
        if (c.j1 == c.j2 || z_exponent(model, c.j1) != 1 || z_exponent(model, c.j2) != 1)
            throw Error("monomial step (pair) needs two distinct z-labels of exponent 1");
        out.push_back(without_x(base, c.i1));
        out.push_back(without_x(base, c.i2));
        for (auto j : {c.j1, c.j2}) {
            auto zc = base;
            zc.z.erase(j);
            out.push_back(zc);
        }
        break;
    }
    case MonomialVariant::YZPair: {
        if (model.m != 1 || z_exponent(model, c.j1) != 1)
            throw Error("monomial step (y,z) needs m = 1 and a z-label of exponent 1");
        out.push_back(without_x(base, c.i1));
        out.push_back(without_x(base, c.i2));
        auto yc = base;
        yc.m = 0;
        out.push_back(yc);
        auto zc = base;
        zc.z.erase(c.j1);
        out.push_back(zc);
        break;
    }
    }
    return out;
}

std::vector<LocalModel> step_mult2(const LocalModel& model, Label i1)
{
    if (model.m != 1)
        throw Error("multiplicity-2 step needs m = 1, got m = " + std::to_string(model.m));
    if (!model.z.empty())
        throw Error("multiplicity-2 step needs deg_z = 0; apply the monomial steps first");
    if (model.x.size() < 2 || !has_x(model, i1))
        throw Error("multiplicity-2 step needs |I| >= 2 and i1 in I");
    auto base = germ_only(model);
    auto zero = base;
    zero.m = 0;
    return {without_x(base, i1), zero};
}

LocalModel normalize(const LocalModel& model)
{
    if (model.m != 0 || model.z.size() != 1 || model.z.begin()->second != 1)
        return model;
    auto out = model;
    out.z.clear();
    out.m = 1;
    return out;
}

std::optional<Rule> select_rule(const LocalModel& model)
{
    if (is_resolved(model))
        return std::nullopt;
    if (model.m >= 2)
        return Rule::Detres;
    std::size_t ones = 0;
    for (const auto& [j, a] : model.z) {
        if (a >= 2)
            return Rule::Monres1;
        ++ones;
    }
    if (ones >= 2)
        return Rule::Monres2;
    if (ones == 1)
        return model.m == 1 ? Rule::Monres3 : Rule::Normalize;
    return Rule::Binres;
}

std::vector<LocalModel> apply_rule(Rule rule, const LocalModel& model, const Center& c)
{
    auto need = [&](std::size_t nx, std::size_t nz) {
        if (c.x.size() != nx || c.z.size() != nz)
            throw Error(std::string("malformed center for ") + rule_name(rule));
    };
    switch (rule) {
    case Rule::Detres:
        need(2, 0);
        return step_determinantal(model, c.x[0], c.x[1], c.fresh.value());
    case Rule::Monres1:
        need(2, 1);
        return step_monomial(model, {MonomialVariant::ExponentAtLeastTwo, c.x[0], c.x[1], c.z[0], 0}, c.fresh.value());
    case Rule::Monres2:
        need(2, 2);
        return step_monomial(model, {MonomialVariant::Pair, c.x[0], c.x[1], c.z[0], c.z[1]});
    case Rule::Monres3:
        need(2, 1);
        return step_monomial(model, {MonomialVariant::YZPair, c.x[0], c.x[1], c.z[0], 0});
    case Rule::Normalize:
        return {normalize(germ_only(model))};
    case Rule::Binres:
        need(1, 0);
        return step_mult2(model, c.x[0]);
    }
    throw Error("unknown rule");
}

ResolutionPolicy ResolutionPolicy::from_environment()
{
    ResolutionPolicy p;
    if (const char* s = std::getenv("SNCLAB_SEED"); s && *s) {
        char* end = nullptr;
        auto v = std::strtoull(s, &end, 10);
        if (*end != '\0')
            throw Error(std::string("SNCLAB_SEED is not an unsigned integer: ") + s);
        p.seed = v;
    }
    return p;
}

Nerve nerve_of(const std::vector<std::vector<Label>>& index_sets)
{
    std::set<std::vector<Label>> sets(index_sets.begin(), index_sets.end());
    Nerve out;
    for (const auto& s : sets) {
        bool maximal = std::none_of(sets.begin(), sets.end(), [&](const std::vector<Label>& t) {
            return t.size() > s.size() && std::includes(t.begin(), t.end(), s.begin(), s.end());
        });
        if (maximal)
            out.push_back(s);
    }
    return out;
}

std::vector<std::size_t> ResolutionTrace::leaves() const
{
    std::vector<std::size_t> out;
    for (std::size_t n = 0; n < nodes.size(); ++n)
        if (!nodes[n].expanded_by)
            out.push_back(n);
    return out;
}

bool ResolutionTrace::all_leaves_resolved() const
{
    auto l = leaves();
    return std::all_of(l.begin(), l.end(), [&](std::size_t n) { return is_resolved(nodes[n].model); });
}

bool ResolutionTrace::certificate_holds() const
{
    for (const auto& s : steps)
        for (const auto& p : s.certificate)
            if (!p.decreasing || !(p.child < p.parent))
                return false;
    return true;
}

bool ResolutionTrace::nerve_invariant() const
{
    return std::all_of(steps.begin(), steps.end(), [&](const TraceStep& s) { return s.nerve == initial_nerve; });
}

namespace {

class Engine {
public:
    Engine(const std::vector<LocalModel>& roots, const ResolutionPolicy& policy) : policy_(policy)
    {
        std::optional<Label> top;
        auto see = [&](Label l) { top = top ? std::max(*top, l) : l; };
        for (const auto& r : roots) {
            r.validate();
            for (auto i : r.x)
                see(i);
            for (const auto& [j, a] : r.z)
                see(j);
        }
        next_label_ = top ? *top + 1 : 1;
        if (policy.seed)
            rng_.seed(static_cast<std::mt19937::result_type>(*policy.seed));
        for (const auto& r : roots) {
            TraceNode n;
            n.model = germ_only(r);
            n.certified = mdeg(r);
            trace_.roots.push_back(trace_.nodes.size());
            trace_.nodes.push_back(std::move(n));
            ++live_[r.x];
        }
        trace_.initial_nerve = current_nerve();
    }

    ResolutionTrace run()
    {
        std::deque<std::size_t> work(trace_.roots.begin(), trace_.roots.end());
        while (!work.empty()) {
            auto id = work.front();
            work.pop_front();
            auto rule = select_rule(trace_.nodes[id].model);
            if (!rule)
                continue;
            if (policy_.max_steps && trace_.steps.size() >= *policy_.max_steps)
                throw Error("step limit of " + std::to_string(*policy_.max_steps) + " reached");
            for (auto child : expand(id, *rule))
                work.push_back(child);
        }
        return std::move(trace_);
    }

private:
    // Lowest labels, or a seeded random choice.
    std::vector<Label> pick(std::vector<Label> candidates, std::size_t count)
    {
        if (policy_.seed)
            std::shuffle(candidates.begin(), candidates.end(), rng_);
        candidates.resize(count);
        return candidates;
    }

    Center choose(Rule rule, const LocalModel& m)
    {
        Center c;
        std::vector<Label> zs, zs_big;
        for (const auto& [j, a] : m.z) {
            zs.push_back(j);
            if (a >= 2)
                zs_big.push_back(j);
        }
        switch (rule) {
        case Rule::Detres:
            c.x = pick(m.x, 2);
            c.fresh = next_label_++;
            break;
        case Rule::Monres1:
            c.x = pick(m.x, 2);
            c.z = pick(zs_big, 1);
            c.fresh = next_label_++;
            break;
        case Rule::Monres2:
            c.x = pick(m.x, 2);
            c.z = pick(zs, 2);
            break;
        case Rule::Monres3:
            c.x = pick(m.x, 2);
            c.z = zs;
            c.y = true;
            break;
        case Rule::Normalize:
            c.z = zs;
            break;
        case Rule::Binres:
            c.x = pick(m.x, 1);
            c.y = true;
            break;
        }
        return c;
    }

    std::vector<std::size_t> expand(std::size_t id, Rule rule)
    {
        const auto model = trace_.nodes[id].model;
        TraceStep step;
        step.rule = rule;
        step.node = id;
        step.center = choose(rule, model);
        auto charts = apply_rule(rule, model, step.center);
        const std::size_t step_id = trace_.steps.size();
        const Mdeg parent = trace_.nodes[id].certified;

        if (--live_[model.x] == 0)
            live_.erase(model.x);
        for (std::size_t k = 0; k < charts.size(); ++k) {
            TraceNode n;
            n.model = std::move(charts[k]);
            n.model.genealogy = model.genealogy;
            n.model.genealogy.emplace_back(step_id, k);
            n.produced_by = step_id;
            const Mdeg child = mdeg(n.model);
            if (rule == Rule::Normalize) {
                n.certified = parent;
            } else {
                n.certified = child;
                bool ok = child < parent;
                step.certificate.push_back({parent, child, ok});
                if (!ok)
                    throw Error(std::string("internal error: ") + rule_name(rule) + " chart " + std::to_string(k) +
                                " has mdeg " + to_string(child) + ", not below " + to_string(parent));
            }
            ++live_[n.model.x];
            step.children.push_back(trace_.nodes.size());
            trace_.nodes.push_back(std::move(n));
        }
        trace_.nodes[id].expanded_by = step_id;
        step.nerve = current_nerve();
        auto children = step.children;
        trace_.steps.push_back(std::move(step));
        return children;
    }

    Nerve current_nerve() const
    {
        std::vector<std::vector<Label>> sets;
        for (const auto& [s, count] : live_)
            sets.push_back(s);
        return nerve_of(sets);
    }

    ResolutionPolicy policy_;
    std::mt19937 rng_;
    Label next_label_ = 1;
    std::map<std::vector<Label>, std::size_t> live_;
    ResolutionTrace trace_;
};

} // namespace

ResolutionTrace resolve(const std::vector<LocalModel>& roots, const ResolutionPolicy& policy)
{
    return Engine(roots, policy).run();
}

bool verify_genealogy(const ResolutionTrace& trace, std::size_t node)
{
    if (node >= trace.nodes.size())
        throw Error("unknown trace node " + std::to_string(node));
    const auto& target = trace.nodes[node];
    // Walk back to the root through the producing steps.
    std::size_t at = node;
    while (trace.nodes[at].produced_by)
        at = trace.steps[*trace.nodes[at].produced_by].node;
    LocalModel current = trace.nodes[at].model;
    for (const auto& [step_id, chart] : target.model.genealogy) {
        if (step_id >= trace.steps.size())
            return false;
        const auto& step = trace.steps[step_id];
        if (!trace.nodes[step.node].model.same_germ(current))
            return false;
        auto charts = apply_rule(step.rule, current, step.center);
        if (chart >= charts.size())
            return false;
        current = charts[chart];
    }
    return current.same_germ(target.model);
}

std::vector<LocalModel> embed_snc(const SncModel& model)
{
    const long n = static_cast<long>(model.dimension) + 1;
    std::vector<LocalModel> roots;
    for (const auto& s : model.strata) {
        const long d = static_cast<long>(s.components.size());
        for (long m = 0; m * m <= n - d; ++m) {
            LocalModel r;
            r.x.assign(s.components.begin(), s.components.end());
            r.m = m;
            roots.push_back(std::move(r));
        }
    }
    return roots;
}

bool validate_determinantal_profile(long n, const std::vector<std::pair<long, long>>& observed)
{
    return std::all_of(observed.begin(), observed.end(),
                       [&](const auto& p) { return p.second == p.first * p.first && p.first * p.first <= n; });
}

} // namespace snclab
