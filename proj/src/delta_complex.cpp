#include "snclab/delta_complex.hpp"

#include "snclab/smith.hpp"
#include "snclab/union_find.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace snclab {

namespace {

const std::string kNoLabel;

} // namespace

DeltaComplex DeltaComplex::build(std::vector<std::vector<FaceList>> cells,
                                 std::vector<std::vector<std::string>> labels)
{
    while (!cells.empty() && cells.back().empty())
        cells.pop_back();
    for (std::size_t k = 0; k < cells.size(); ++k) {
        for (std::size_t c = 0; c < cells[k].size(); ++c) {
            const auto& f = cells[k][c];
            if (k == 0) {
                if (!f.empty())
                    throw Error("0-cell " + std::to_string(c) + " must not have faces");
                continue;
            }
            if (f.size() != k + 1)
                throw Error("dangling face: " + std::to_string(k) + "-cell " + std::to_string(c) + " has " +
                            std::to_string(f.size()) + " faces, expected " + std::to_string(k + 1));
            for (auto id : f)
                if (id >= cells[k - 1].size())
                    throw Error("dangling face: " + std::to_string(k) + "-cell " + std::to_string(c) +
                                " references missing " + std::to_string(k - 1) + "-cell " + std::to_string(id));
        }
    }
    if (!labels.empty()) {
        labels.resize(cells.size());
        for (std::size_t k = 0; k < cells.size(); ++k)
            labels[k].resize(cells[k].size());
    }

    DeltaComplex out;
    out.cells_ = std::move(cells);
    out.labels_ = std::move(labels);

    for (int k = 2; k <= out.dimension(); ++k) {
        IntMatrix dd = out.boundary(k - 1) * out.boundary(k);
        for (std::size_t c = 0; c < dd.cols(); ++c)
            for (std::size_t r = 0; r < dd.rows(); ++r)
                if (dd(r, c) != 0)
                    throw Error("boundary of boundary is nonzero at " + std::to_string(k) + "-cell " +
                                std::to_string(c));
    }
    return out;
}

DeltaComplex DeltaComplex::from_simplices(const std::vector<std::vector<int>>& simplices)
{
    std::set<std::vector<int>> all;
    for (auto s : simplices) {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        if (s.empty())
            continue;
        const std::size_t n = s.size();
        for (unsigned long mask = 1; mask < (1ul << n); ++mask) {
            std::vector<int> sub;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (1ul << i))
                    sub.push_back(s[i]);
            all.insert(std::move(sub));
        }
    }
    std::vector<std::map<std::vector<int>, std::size_t>> index;
    for (const auto& s : all) {
        if (index.size() < s.size())
            index.resize(s.size());
        index[s.size() - 1].emplace(s, 0);
    }
    std::vector<std::vector<FaceList>> cells(index.size());
    std::vector<std::vector<std::string>> labels(index.size());
    for (std::size_t k = 0; k < index.size(); ++k) {
        std::size_t next = 0;
        for (auto& [s, id] : index[k]) {
            id = next++;
            FaceList faces;
            if (k > 0)
                for (std::size_t drop = 0; drop < s.size(); ++drop) {
                    std::vector<int> f = s;
                    f.erase(f.begin() + static_cast<long>(drop));
                    faces.push_back(index[k - 1].at(f));
                }
            cells[k].push_back(std::move(faces));
            std::string label;
            for (std::size_t i = 0; i < s.size(); ++i)
                label += (i ? "," : "") + std::to_string(s[i]);
            labels[k].push_back(std::move(label));
        }
    }
    return build(std::move(cells), std::move(labels));
}

std::size_t DeltaComplex::count(int k) const
{
    if (k < 0 || k > dimension())
        return 0;
    return cells_[static_cast<std::size_t>(k)].size();
}

const std::string& DeltaComplex::label(int k, std::size_t cell) const
{
    if (k < 0 || static_cast<std::size_t>(k) >= labels_.size() || cell >= labels_[k].size())
        return kNoLabel;
    return labels_[k][cell];
}

IntMatrix DeltaComplex::boundary(int k) const
{
    IntMatrix m(count(k - 1), count(k));
    if (k <= 0)
        return m;
    for (std::size_t c = 0; c < count(k); ++c) {
        const auto& f = cells_[k][c];
        for (std::size_t i = 0; i < f.size(); ++i)
            m(f[i], c) += (i % 2 == 0) ? 1 : -1;
    }
    return m;
}

bool DeltaComplex::is_connected() const
{
    const std::size_t n = count(0);
    if (n == 0)
        return false;
    UnionFind uf(n);
    for (std::size_t e = 0; e < count(1); ++e)
        uf.unite(cells_[1][e][0], cells_[1][e][1]);
    return uf.components() == 1;
}

std::vector<std::size_t> DeltaComplex::vertices_of(int k, std::size_t cell) const
{
    if (k == 0)
        return {cell};
    std::set<std::size_t> out;
    for (auto f : faces(k, cell))
        for (auto v : vertices_of(k - 1, f))
            out.insert(v);
    return {out.begin(), out.end()};
}

long DeltaComplex::euler_characteristic() const
{
    long chi = 0;
    for (int k = 0; k <= dimension(); ++k)
        chi += (k % 2 == 0 ? 1 : -1) * static_cast<long>(count(k));
    return chi;
}

DeltaComplex DeltaComplex::remove_open_star(int k, std::size_t cell) const
{
    if (k < 0 || k > dimension() || cell >= count(k))
        throw Error("unknown cell " + std::to_string(k) + ":" + std::to_string(cell));
    std::vector<std::vector<bool>> removed(cells_.size());
    for (std::size_t j = 0; j < cells_.size(); ++j)
        removed[j].assign(cells_[j].size(), false);
    removed[k][cell] = true;
    for (std::size_t j = k + 1; j < cells_.size(); ++j)
        for (std::size_t c = 0; c < cells_[j].size(); ++c)
            for (auto f : cells_[j][c])
                if (removed[j - 1][f])
                    removed[j][c] = true;

    std::vector<std::vector<FaceList>> cells(cells_.size());
    std::vector<std::vector<std::string>> labels(labels_.empty() ? 0 : cells_.size());
    std::vector<std::vector<std::size_t>> renumber(cells_.size());
    for (std::size_t j = 0; j < cells_.size(); ++j) {
        renumber[j].assign(cells_[j].size(), 0);
        for (std::size_t c = 0; c < cells_[j].size(); ++c) {
            if (removed[j][c])
                continue;
            renumber[j][c] = cells[j].size();
            FaceList faces;
            for (auto f : cells_[j][c])
                faces.push_back(renumber[j - 1][f]);
            cells[j].push_back(std::move(faces));
            if (!labels.empty())
                labels[j].push_back(labels_[j][c]);
        }
    }
    return build(std::move(cells), std::move(labels));
}

namespace {

class IsoSearch {
public:
    IsoSearch(const DeltaComplex& a, const DeltaComplex& b) : a_(a), b_(b) {}

    std::optional<std::vector<std::size_t>> run()
    {
        if (a_.dimension() != b_.dimension())
            return std::nullopt;
        for (int k = 0; k <= a_.dimension(); ++k)
            if (a_.count(k) != b_.count(k))
                return std::nullopt;
        const int dim = a_.dimension();
        map_.resize(dim + 1);
        used_.resize(dim + 1);
        for (int k = 0; k <= dim; ++k) {
            map_[k].assign(a_.count(k), kUnset);
            used_[k].assign(b_.count(k), false);
        }
        degree_a_ = degrees(a_);
        degree_b_ = degrees(b_);
        order_ = schedule();
        if (!search(0))
            return std::nullopt;
        return dim >= 0 ? map_[0] : std::vector<std::size_t>{};
    }

private:
    static constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

    static std::vector<std::size_t> degrees(const DeltaComplex& c)
    {
        std::vector<std::size_t> deg(c.count(0), 0);
        for (std::size_t e = 0; e < c.count(1); ++e)
            for (auto v : c.faces(1, e))
                ++deg[v];
        return deg;
    }

    // Cells of `a` in an order where every cell follows its faces and
    // vertices are introduced breadth-first, so edges are checked early.
    std::vector<std::pair<int, std::size_t>> schedule() const
    {
        const int dim = a_.dimension();
        std::vector<std::pair<int, std::size_t>> order;
        if (dim < 0)
            return order;
        std::vector<std::vector<bool>> placed(dim + 1);
        for (int k = 0; k <= dim; ++k)
            placed[k].assign(a_.count(k), false);
        std::vector<std::vector<std::size_t>> incident(a_.count(0));
        for (std::size_t e = 0; e < a_.count(1); ++e)
            for (auto v : a_.faces(1, e))
                incident[v].push_back(e);

        auto flush = [&]() {
            bool changed = true;
            while (changed) {
                changed = false;
                for (int k = 1; k <= dim; ++k)
                    for (std::size_t c = 0; c < a_.count(k); ++c) {
                        if (placed[k][c])
                            continue;
                        const auto& f = a_.faces(k, c);
                        if (std::all_of(f.begin(), f.end(), [&](std::size_t x) { return placed[k - 1][x]; })) {
                            placed[k][c] = true;
                            order.emplace_back(k, c);
                            changed = true;
                        }
                    }
            }
        };

        for (std::size_t root = 0; root < a_.count(0); ++root) {
            if (placed[0][root])
                continue;
            std::queue<std::size_t> q;
            q.push(root);
            placed[0][root] = true;
            order.emplace_back(0, root);
            flush();
            while (!q.empty()) {
                auto v = q.front();
                q.pop();
                for (auto e : incident[v])
                    for (auto w : a_.faces(1, e))
                        if (!placed[0][w]) {
                            placed[0][w] = true;
                            order.emplace_back(0, w);
                            flush();
                            q.push(w);
                        }
            }
        }
        return order;
    }

    bool search(std::size_t pos)
    {
        if (pos == order_.size())
            return true;
        auto [k, c] = order_[pos];
        std::vector<std::size_t> want;
        if (k > 0) {
            for (auto f : a_.faces(k, c))
                want.push_back(map_[k - 1][f]);
            std::sort(want.begin(), want.end());
        }
        for (std::size_t cand = 0; cand < b_.count(k); ++cand) {
            if (used_[k][cand])
                continue;
            if (k == 0) {
                if (degree_a_[c] != degree_b_[cand])
                    continue;
            } else {
                auto have = b_.faces(k, cand);
                std::sort(have.begin(), have.end());
                if (have != want)
                    continue;
            }
            used_[k][cand] = true;
            map_[k][c] = cand;
            if (search(pos + 1))
                return true;
            used_[k][cand] = false;
            map_[k][c] = kUnset;
        }
        return false;
    }

    const DeltaComplex& a_;
    const DeltaComplex& b_;
    std::vector<std::vector<std::size_t>> map_;
    std::vector<std::vector<bool>> used_;
    std::vector<std::size_t> degree_a_;
    std::vector<std::size_t> degree_b_;
    std::vector<std::pair<int, std::size_t>> order_;
};

} // namespace

std::optional<std::vector<std::size_t>> find_isomorphism(const DeltaComplex& a, const DeltaComplex& b)
{
    return IsoSearch(a, b).run();
}

AbelianGroup homology(const DeltaComplex& complex, int k)
{
    if (k < 0 || k > complex.dimension())
        return {};
    const std::size_t cycles_rank = complex.count(k) - (k == 0 ? 0 : integer_rank(complex.boundary(k)));
    auto next = smith_diagonal(complex.boundary(k + 1));
    AbelianGroup g = AbelianGroup::from_invariant_factors(cycles_rank, next);
    return g;
}

std::vector<std::size_t> betti_numbers(const DeltaComplex& complex)
{
    const int dim = complex.dimension();
    std::vector<std::size_t> ranks(dim + 2, 0);
    for (int k = 1; k <= dim; ++k)
        ranks[k] = integer_rank(complex.boundary(k));
    std::vector<std::size_t> betti;
    for (int k = 0; k <= dim; ++k)
        betti.push_back(complex.count(k) - ranks[k] - ranks[k + 1]);
    return betti;
}

bool is_q_acyclic(const DeltaComplex& complex)
{
    if (!complex.is_connected())
        throw Error("complex is disconnected");
    auto betti = betti_numbers(complex);
    return std::all_of(betti.begin() + 1, betti.end(), [](std::size_t b) { return b == 0; });
}

} // namespace snclab
