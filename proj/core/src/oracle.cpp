#include "relalg/oracle.hpp"

#include "relalg/error.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <set>

namespace relalg {

namespace {

    std::uint32_t permute_mask(std::size_t k, std::uint32_t mask, const std::vector<std::size_t> &perm)
    {
        std::uint32_t out = 0;
        for (std::size_t x = 0; x < k; ++x)
            for (std::size_t y = 0; y < k; ++y)
                if ((mask >> (x * k + y)) & 1U)
                    out |= std::uint32_t{1} << (perm[x] * k + perm[y]);
        return out;
    }

    bool covers_all_points(std::size_t k, std::uint32_t mask)
    {
        for (std::size_t p = 0; p < k; ++p) {
            bool used = false;
            for (std::size_t q = 0; q < k && !used; ++q)
                used = ((mask >> (p * k + q)) & 1U) || ((mask >> (q * k + p)) & 1U);
            if (!used)
                return false;
        }
        return true;
    }

    // Bitmask view of the full algebra Re(W) over a unit of at most 32 pairs.
    class SetAlgebra {
    public:
        explicit SetAlgebra(const ConcreteUnit &u) : w_(u.pairs)
        {
            const auto m = w_.size();
            reverse_.assign(m, -1);
            middles_.resize(m);
            for (std::size_t p = 0; p < m; ++p) {
                const auto [x, y] = w_[p];
                if (x == y)
                    diagonal_ |= bit(p);
                for (std::size_t q = 0; q < m; ++q) {
                    if (w_[q] == PointPair{y, x})
                        reverse_[p] = static_cast<int>(q);
                    if (w_[q].first != x)
                        continue;
                    for (std::size_t r = 0; r < m; ++r)
                        if (w_[r].first == w_[q].second && w_[r].second == y)
                            middles_[p].emplace_back(q, r);
                }
            }
        }

        static std::uint64_t bit(std::size_t p) { return std::uint64_t{1} << p; }

        std::size_t size() const { return w_.size(); }
        std::uint64_t diagonal() const { return diagonal_; }
        int reverse(std::size_t p) const { return reverse_[p]; }
        const std::vector<std::pair<std::size_t, std::size_t>> &middles(std::size_t p) const { return middles_[p]; }

        std::uint64_t compose(std::uint64_t r, std::uint64_t s) const
        {
            std::uint64_t out = 0;
            for (std::size_t p = 0; p < w_.size(); ++p)
                for (auto [q, t] : middles_[p])
                    if ((r & bit(q)) && (s & bit(t))) {
                        out |= bit(p);
                        break;
                    }
            return out;
        }

        std::uint64_t converse(std::uint64_t r) const
        {
            std::uint64_t out = 0;
            for (std::size_t p = 0; p < w_.size(); ++p)
                if (reverse_[p] >= 0 && (r & bit(static_cast<std::size_t>(reverse_[p]))))
                    out |= bit(p);
            return out;
        }

    private:
        std::vector<PointPair> w_;
        std::uint64_t diagonal_ = 0;
        std::vector<int> reverse_;
        std::vector<std::vector<std::pair<std::size_t, std::size_t>>> middles_;
    };

    bool flags_hold(const AtomStructure &s, const ConcreteUnit &u)
    {
        const auto f = unit_flags(u);
        return (!s.flags().reflexive || f.reflexive) && (!s.flags().symmetric || f.symmetric);
    }

    bool labelling_represents(const AtomStructure &s, const SetAlgebra &alg, const std::vector<AtomIndex> &label)
    {
        const auto n = s.size();
        std::vector<std::uint64_t> h(n, 0);
        for (std::size_t p = 0; p < label.size(); ++p)
            h[label[p]] |= SetAlgebra::bit(p);
        auto image = [&](const Element &x) {
            std::uint64_t out = 0;
            for (AtomIndex a = 0; a < n; ++a)
                if (x.contains(a))
                    out |= h[a];
            return out;
        };
        if (std::ranges::any_of(h, [](std::uint64_t m) { return m == 0; }))
            return false;
        if (image(s.identity()) != alg.diagonal())
            return false;
        for (AtomIndex a = 0; a < n; ++a) {
            const auto ca = s.converse_of(a);
            if ((ca ? h[*ca] : 0) != alg.converse(h[a]))
                return false;
            for (AtomIndex b = 0; b < n; ++b)
                if (image(s.comp(a, b)) != alg.compose(h[a], h[b]))
                    return false;
        }
        return true;
    }

    class Search {
    public:
        Search(const AtomStructure &s, const ConcreteUnit &u) : s_(s), alg_(u), label_(u.pairs.size())
        {
            const auto m = u.pairs.size();
            for (AtomIndex a = 0; a < s.size(); ++a)
                if (auto c = s.converse_of(a))
                    converse_image_.insert(*c);
            // each triangle (xy, xz, zy) is checked once its last pair is labelled
            triangles_.resize(m);
            for (std::size_t p = 0; p < m; ++p)
                for (auto [q, r] : alg_.middles(p))
                    triangles_[std::max({p, q, r})].push_back({p, q, r});
            remaining_diag_.assign(m + 1, 0);
            for (std::size_t p = m; p-- > 0;)
                remaining_diag_[p] = remaining_diag_[p + 1] + (u.pairs[p].first == u.pairs[p].second ? 1 : 0);
            uses_.assign(s.size(), 0);
        }

        bool run() { return assign(0); }
        const std::vector<AtomIndex> &labels() const { return label_; }

    private:
        bool diagonal(std::size_t p) const { return (alg_.diagonal() >> p) & 1U; }

        bool locally_consistent(std::size_t p) const
        {
            const auto a = label_[p];
            const int r = alg_.reverse(p);
            if (r < 0) {
                if (converse_image_.contains(a))
                    return false;
            }
            else if (static_cast<std::size_t>(r) <= p) {
                const auto b = label_[static_cast<std::size_t>(r)];
                if (s_.converse_of(a) != b || s_.converse_of(b) != a)
                    return false;
            }
            for (const auto &[xy, xz, zy] : triangles_[p])
                if (!s_.comp(label_[xz], label_[zy]).contains(label_[xy]))
                    return false;
            return true;
        }

        bool enough_left(std::size_t next) const
        {
            std::size_t unused_id = 0, unused_other = 0;
            for (AtomIndex a = 0; a < s_.size(); ++a)
                if (uses_[a] == 0)
                    ++(s_.is_identity(a) ? unused_id : unused_other);
            const auto left = label_.size() - next;
            return remaining_diag_[next] >= unused_id && left - remaining_diag_[next] >= unused_other;
        }

        bool assign(std::size_t p)
        {
            if (p == label_.size())
                return labelling_represents(s_, alg_, label_);
            for (AtomIndex a = 0; a < s_.size(); ++a) {
                if (s_.is_identity(a) != diagonal(p))
                    continue;
                label_[p] = a;
                ++uses_[a];
                if (locally_consistent(p) && enough_left(p + 1) && assign(p + 1))
                    return true;
                --uses_[a];
            }
            return false;
        }

        struct Triangle {
            std::size_t xy, xz, zy;
        };

        const AtomStructure &s_;
        SetAlgebra alg_;
        std::vector<AtomIndex> label_;
        std::set<AtomIndex> converse_image_;
        std::vector<std::vector<Triangle>> triangles_;
        std::vector<std::size_t> remaining_diag_;
        std::vector<std::size_t> uses_;
    };

} // namespace

std::vector<std::uint32_t> canonical_unit_masks(std::size_t k)
{
    if (k > 5)
        throw GuardExceeded("unit enumeration supports at most 5 points");
    if (k == 0)
        return {0};
    std::vector<std::vector<std::size_t>> perms;
    std::vector<std::size_t> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    do
        perms.push_back(perm);
    while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<std::uint32_t> out;
    const std::uint64_t limit = std::uint64_t{1} << (k * k);
    for (std::uint64_t m = 0; m < limit; ++m) {
        const auto mask = static_cast<std::uint32_t>(m);
        if (!covers_all_points(k, mask))
            continue;
        const bool canonical = std::ranges::all_of(perms, [&](const auto &pi) { return permute_mask(k, mask, pi) >= mask; });
        if (canonical)
            out.push_back(mask);
    }
    return out;
}

ConcreteUnit unit_from_mask(std::size_t k, std::uint32_t mask)
{
    std::vector<PointPair> pairs;
    for (std::size_t x = 0; x < k; ++x)
        for (std::size_t y = 0; y < k; ++y)
            if ((mask >> (x * k + y)) & 1U)
                pairs.emplace_back(x, y);
    return make_unit(k, std::move(pairs));
}

std::vector<ConcreteUnit> unit_catalog(std::size_t max_base)
{
    if (max_base > 3)
        throw GuardExceeded("unit catalog supports bases of at most 3 points");
    std::vector<ConcreteUnit> out;
    for (std::size_t k = 0; k <= max_base; ++k)
        for (auto mask : canonical_unit_masks(k))
            out.push_back(unit_from_mask(k, mask));
    return out;
}

bool is_representation(const AtomStructure &s, const RepresentationWitness &w)
{
    validate(w.unit);
    if (w.assignment.size() != w.unit.pairs.size() || w.unit.pairs.size() > 64)
        return false;
    if (std::ranges::any_of(w.assignment, [&](AtomIndex a) { return a >= s.size(); }))
        return false;
    if (!flags_hold(s, w.unit))
        return false;
    return labelling_represents(s, SetAlgebra{w.unit}, w.assignment);
}

SearchResult brute_force_representation(const AtomStructure &s, std::size_t max_base, const OracleLimits &limits)
{
    if (s.size() > limits.max_atoms)
        throw GuardExceeded("brute-force search is limited to " + std::to_string(limits.max_atoms) + " atoms, got " +
            std::to_string(s.size()));
    if (max_base > limits.max_base)
        throw GuardExceeded("brute-force search is limited to bases of " + std::to_string(limits.max_base) + " points");

    SearchResult result;
    result.max_base = max_base;
    const auto identities = s.identity().count();
    for (std::size_t k = 0; k <= max_base; ++k) {
        for (auto mask : canonical_unit_masks(k)) {
            const auto unit = unit_from_mask(k, mask);
            ++result.bases_tried;
            const auto pairs = unit.pairs.size();
            const auto diag = static_cast<std::size_t>(
                std::ranges::count_if(unit.pairs, [](const PointPair &p) { return p.first == p.second; }));
            if (pairs < s.size() || diag < identities || pairs - diag < s.size() - identities)
                continue;
            if (!flags_hold(s, unit))
                continue;
            Search search{s, unit};
            if (search.run()) {
                result.found = true;
                result.witness = RepresentationWitness{unit, search.labels()};
                return result;
            }
        }
    }
    return result;
}

} // namespace relalg
