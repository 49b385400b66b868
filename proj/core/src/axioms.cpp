#include "relalg/axioms.hpp"

#include "relalg/error.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <random>
#include <tuple>

namespace relalg {

namespace {

    // Operations on raw bitmasks, backed by lookup tables when they fit.
    class MaskOps {
    public:
        using value_type = std::uint64_t;

        explicit MaskOps(const AtomStructure &s) : s_(s), n_(s.size()), top_(full_mask(s.size())), idt_(s.identity().bits())
        {
            if (n_ <= table_limit) {
                const std::size_t m = std::size_t{1} << n_;
                std::vector<std::uint16_t> row(m);
                table_.assign(m * m, 0);
                conv_.assign(m, 0);
                for (std::size_t x = 1; x < m; ++x) {
                    auto a = static_cast<AtomIndex>(std::countr_zero(x));
                    auto rest = x & (x - 1);
                    // row[y] = comp(a, .) extended additively over y
                    row[0] = 0;
                    for (std::size_t y = 1; y < m; ++y) {
                        auto b = static_cast<AtomIndex>(std::countr_zero(y));
                        row[y] = static_cast<std::uint16_t>(row[y & (y - 1)] | s.comp(a, b).bits());
                    }
                    for (std::size_t y = 0; y < m; ++y)
                        table_[(x << n_) | y] = static_cast<std::uint16_t>(table_[(rest << n_) | y] | row[y]);
                    auto ca = s.converse_of(a);
                    conv_[x] = conv_[rest] | (ca ? std::uint64_t{1} << *ca : 0);
                }
            }
        }

        value_type one() const { return top_; }
        value_type zero() const { return 0; }
        value_type idt() const { return idt_; }
        value_type join(value_type x, value_type y) const { return x | y; }
        value_type meet(value_type x, value_type y) const { return x & y; }
        value_type neg(value_type x) const { return ~x & top_; }
        bool eq(value_type x, value_type y) const { return x == y; }
        bool leq(value_type x, value_type y) const { return (x & ~y) == 0; }

        value_type comp(value_type x, value_type y) const
        {
            if (!table_.empty())
                return table_[(x << n_) | y];
            value_type out = 0;
            for (auto xs = x; xs != 0; xs &= xs - 1)
                for (auto ys = y; ys != 0; ys &= ys - 1)
                    out |= s_.comp(static_cast<AtomIndex>(std::countr_zero(xs)), static_cast<AtomIndex>(std::countr_zero(ys))).bits();
            return out;
        }

        value_type conv(value_type x) const
        {
            if (!conv_.empty())
                return conv_[x];
            value_type out = 0;
            for (auto xs = x; xs != 0; xs &= xs - 1)
                if (auto c = s_.converse_of(static_cast<AtomIndex>(std::countr_zero(xs))))
                    out |= std::uint64_t{1} << *c;
            return out;
        }

    private:
        static constexpr std::size_t table_limit = 10;

        const AtomStructure &s_;
        std::size_t n_;
        value_type top_;
        value_type idt_;
        std::vector<std::uint16_t> table_;
        std::vector<value_type> conv_;
    };

    // Same interface over Element, through the AtomStructure API.
    class ElementOps {
    public:
        using value_type = Element;

        explicit ElementOps(const AtomStructure &s) : s_(s) {}

        value_type one() const { return s_.top(); }
        value_type zero() const { return s_.zero(); }
        value_type idt() const { return s_.identity(); }
        value_type join(const value_type &x, const value_type &y) const { return relalg::join(x, y); }
        value_type meet(const value_type &x, const value_type &y) const { return relalg::meet(x, y); }
        value_type neg(const value_type &x) const { return complement(x); }
        bool eq(const value_type &x, const value_type &y) const { return x == y; }
        bool leq(const value_type &x, const value_type &y) const { return relalg::leq(x, y); }
        value_type comp(const value_type &x, const value_type &y) const { return s_.compose(x, y); }
        value_type conv(const value_type &x) const { return s_.converse(x); }

    private:
        const AtomStructure &s_;
    };

    // Each clause: id, axiom, printable form, arity, and a generic evaluator.
#define RELALG_CLAUSE(NAME, ID, AXIOM, TEXT, ARITY, BODY)                                                              \
    struct NAME {                                                                                                      \
        static constexpr const char *id = ID;                                                                          \
        static constexpr const char *axiom = AXIOM;                                                                    \
        static constexpr const char *text = TEXT;                                                                      \
        static constexpr std::size_t arity = ARITY;                                                                    \
        template <class O, class V>                                                                                    \
        static bool eval([[maybe_unused]] const O &o, [[maybe_unused]] const V &x, [[maybe_unused]] const V &y,        \
            [[maybe_unused]] const V &z)                                                                               \
        {                                                                                                              \
            BODY                                                                                                       \
        }                                                                                                              \
    };

    RELALG_CLAUSE(Ax1a, "Ax 1a", "Ax 1", "x+y = y+x", 2, return o.eq(o.join(x, y), o.join(y, x));)
    RELALG_CLAUSE(Ax1b, "Ax 1b", "Ax 1", "(x+y)+z = x+(y+z)", 3,
        return o.eq(o.join(o.join(x, y), z), o.join(x, o.join(y, z)));)
    RELALG_CLAUSE(Ax1c, "Ax 1c", "Ax 1", "-(-x+y)+-(-x+-y) = x", 2,
        return o.eq(o.join(o.neg(o.join(o.neg(x), y)), o.neg(o.join(o.neg(x), o.neg(y)))), x);)
    RELALG_CLAUSE(Ax1d, "Ax 1d", "Ax 1", "x.y = -(-x+-y)", 2,
        return o.eq(o.meet(x, y), o.neg(o.join(o.neg(x), o.neg(y))));)
    RELALG_CLAUSE(Ax1e, "Ax 1e", "Ax 1", "x+-x = 1 and x.-x = 0", 1,
        return o.eq(o.join(x, o.neg(x)), o.one()) && o.eq(o.meet(x, o.neg(x)), o.zero());)
    RELALG_CLAUSE(Ax2, "Ax 2", "Ax 2", "~(x.~y) = ~x.y", 2, return o.eq(o.conv(o.meet(x, o.conv(y))), o.meet(o.conv(x), y));)
    RELALG_CLAUSE(Ax3a, "Ax 3a", "Ax 3", "(x+y);z = x;z+y;z", 3,
        return o.eq(o.comp(o.join(x, y), z), o.join(o.comp(x, z), o.comp(y, z)));)
    RELALG_CLAUSE(Ax3b, "Ax 3b", "Ax 3", "x;(y+z) = x;y+x;z", 3,
        return o.eq(o.comp(x, o.join(y, z)), o.join(o.comp(x, y), o.comp(x, z)));)
    RELALG_CLAUSE(Ax4a, "Ax 4a", "Ax 4", "1;0 = 0", 0, return o.eq(o.comp(o.one(), o.zero()), o.zero());)
    RELALG_CLAUSE(Ax4b, "Ax 4b", "Ax 4", "0;1 = 0", 0, return o.eq(o.comp(o.zero(), o.one()), o.zero());)
    RELALG_CLAUSE(Ax5a, "Ax 5a", "Ax 5", "(~x;y).z = (~x;(y.(~~x;z))).z", 3,
        const auto cx = o.conv(x);
        return o.eq(o.meet(o.comp(cx, y), z), o.meet(o.comp(cx, o.meet(y, o.comp(o.conv(cx), z))), z));)
    RELALG_CLAUSE(Ax5b, "Ax 5b", "Ax 5", "(x;~y).z = ((x.(z;~~y));~y).z", 3,
        const auto cy = o.conv(y);
        return o.eq(o.meet(o.comp(x, cy), z), o.meet(o.comp(o.meet(x, o.comp(z, o.conv(cy))), cy), z));)
    RELALG_CLAUSE(Ax6a, "Ax 6a", "Ax 6", "1';x <= x", 1, return o.leq(o.comp(o.idt(), x), x);)
    RELALG_CLAUSE(Ax6b, "Ax 6b", "Ax 6", "x;1' <= x", 1, return o.leq(o.comp(x, o.idt()), x);)
    RELALG_CLAUSE(Ax7, "Ax 7", "Ax 7", "1';1' = 1'", 0, return o.eq(o.comp(o.idt(), o.idt()), o.idt());)
    RELALG_CLAUSE(Ax8, "Ax 8", "Ax 8", "(-~1;-~1).1' = 0", 0,
        const auto nc = o.neg(o.conv(o.one()));
        return o.eq(o.meet(o.comp(nc, nc), o.idt()), o.zero());)
    RELALG_CLAUSE(Ax9a, "Ax 9a", "Ax 9", "((x.1');y);z = (x.1');(y;z)", 3,
        const auto xi = o.meet(x, o.idt());
        return o.eq(o.comp(o.comp(xi, y), z), o.comp(xi, o.comp(y, z)));)
    RELALG_CLAUSE(Ax9b, "Ax 9b", "Ax 9", "(x;(y.1'));z = x;((y.1');z)", 3,
        const auto yi = o.meet(y, o.idt());
        return o.eq(o.comp(o.comp(x, yi), z), o.comp(x, o.comp(yi, z)));)
    RELALG_CLAUSE(Ax9c, "Ax 9c", "Ax 9", "(x;y);(z.1') = x;(y;(z.1'))", 3,
        const auto zi = o.meet(z, o.idt());
        return o.eq(o.comp(o.comp(x, y), zi), o.comp(x, o.comp(y, zi)));)
    RELALG_CLAUSE(AxS, "Ax s", "Ax s", "~1 = 1", 0, return o.eq(o.conv(o.one()), o.one());)
    RELALG_CLAUSE(AxRa, "Ax ra", "Ax r", "1';1 = 1", 0, return o.eq(o.comp(o.idt(), o.one()), o.one());)
    RELALG_CLAUSE(AxRb, "Ax rb", "Ax r", "1;1' = 1", 0, return o.eq(o.comp(o.one(), o.idt()), o.one());)

#undef RELALG_CLAUSE

    using Clauses = std::tuple<Ax1a, Ax1b, Ax1c, Ax1d, Ax1e, Ax2, Ax3a, Ax3b, Ax4a, Ax4b, Ax5a, Ax5b, Ax6a, Ax6b, Ax7,
        Ax8, Ax9a, Ax9b, Ax9c, AxS, AxRa, AxRb>;

    constexpr std::array<const char *, 11> axiom_order {
        "Ax 1", "Ax 2", "Ax 3", "Ax 4", "Ax 5", "Ax 6", "Ax 7", "Ax 8", "Ax 9", "Ax s", "Ax r"};

    template <class F>
    void for_each_clause(F &&f)
    {
        std::apply([&](auto... c) { (f(c), ...); }, Clauses{});
    }

    struct ScanResult {
        std::optional<std::array<std::uint64_t, 3>> failure;
        std::uint64_t evaluations = 0;
    };

    template <class Clause>
    ScanResult scan_exhaustive(const MaskOps &o, std::uint64_t top)
    {
        ScanResult r;
        const std::uint64_t end = top + 1;  // top < 2^63 whenever exhaustive mode is within budget
        auto bounds = [&](std::size_t var) { return var < Clause::arity ? end : 1; };
        for (std::uint64_t x = 0; x < bounds(0); ++x)
            for (std::uint64_t y = 0; y < bounds(1); ++y)
                for (std::uint64_t z = 0; z < bounds(2); ++z) {
                    ++r.evaluations;
                    if (!Clause::eval(o, x, y, z)) {
                        r.failure = std::array{x, y, z};
                        return r;
                    }
                }
        return r;
    }

    constexpr std::uint32_t fnv1a(std::string_view text)
    {
        std::uint32_t h = 2166136261U;
        for (char ch : text) {
            h ^= static_cast<unsigned char>(ch);
            h *= 16777619U;
        }
        return h;
    }

    template <class Clause>
    ScanResult scan_sampled(const MaskOps &o, std::uint64_t top, std::uint64_t samples, std::uint64_t seed)
    {
        ScanResult r;
        if constexpr (Clause::arity == 0) {
            r.evaluations = 1;
            if (!Clause::eval(o, std::uint64_t{0}, std::uint64_t{0}, std::uint64_t{0}))
                r.failure = std::array<std::uint64_t, 3>{0, 0, 0};
            return r;
        }
        else {
            // one stream per clause so that clause order does not change draws
            std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), fnv1a(Clause::id)};
            std::mt19937_64 rng{seq};
            for (std::uint64_t i = 0; i < samples; ++i) {
                std::array<std::uint64_t, 3> v{0, 0, 0};
                for (std::size_t k = 0; k < Clause::arity; ++k)
                    v[k] = rng() & top;
                ++r.evaluations;
                if (!Clause::eval(o, v[0], v[1], v[2])) {
                    r.failure = v;
                    return r;
                }
            }
            return r;
        }
    }

    bool exhaustive_within_budget(std::size_t atoms, std::uint64_t budget)
    {
        const auto bits = 3 * atoms;
        if (bits >= 64)
            return false;
        return (std::uint64_t{1} << bits) <= budget;
    }

} // namespace

bool AxiomReport::passed() const
{
    return std::ranges::all_of(verdicts, [](const AxiomVerdict &v) { return v.holds || !v.required; });
}

const AxiomVerdict &AxiomReport::verdict(std::string_view axiom) const
{
    for (const auto &v : verdicts)
        if (v.axiom == axiom)
            return v;
    throw Error("no verdict for axiom '" + std::string{axiom} + "'");
}

const std::vector<ClauseInfo> &axiom_clauses()
{
    static const std::vector<ClauseInfo> clauses = [] {
        std::vector<ClauseInfo> out;
        for_each_clause([&](auto c) {
            using C = decltype(c);
            out.push_back({C::id, C::axiom, C::text, C::arity});
        });
        return out;
    }();
    return clauses;
}

AxiomReport check_axioms(const AtomStructure &s, const AxiomOptions &options)
{
    AxiomReport report;
    report.mode = options.mode;
    report.seed = options.seed;
    if (options.mode == AxiomMode::exhaustive && !exhaustive_within_budget(s.size(), options.budget)) {
        if (!options.fallback_to_sampling)
            throw BudgetExceeded("exhaustive axiom check over " + std::to_string(s.size()) +
                " atoms exceeds the budget of " + std::to_string(options.budget) + " assignments; use sampled mode");
        report.mode = AxiomMode::sampled;
    }
    if (report.mode == AxiomMode::sampled)
        report.samples = options.samples;

    const MaskOps ops{s};
    const auto top = full_mask(s.size());

    for (const auto *name : axiom_order) {
        AxiomVerdict v;
        v.axiom = name;
        if (v.axiom == "Ax s")
            v.required = s.flags().symmetric;
        else if (v.axiom == "Ax r")
            v.required = s.flags().reflexive;
        report.verdicts.push_back(std::move(v));
    }

    for_each_clause([&](auto c) {
        using C = decltype(c);
        auto &v = *std::ranges::find_if(report.verdicts, [](const AxiomVerdict &x) { return x.axiom == C::axiom; });
        if (!v.holds)
            return;  // first failing clause of each axiom is reported
        const auto r = report.mode == AxiomMode::exhaustive ? scan_exhaustive<C>(ops, top)
                                                          : scan_sampled<C>(ops, top, options.samples, options.seed);
        report.evaluations += r.evaluations;
        if (r.failure) {
            v.holds = false;
            Counterexample cx{C::id, C::text, {}};
            for (std::size_t k = 0; k < C::arity; ++k)
                cx.assignment.emplace_back(s.size(), (*r.failure)[k]);
            v.counterexample = std::move(cx);
        }
    });
    return report;
}

bool clause_holds(const AtomStructure &s, std::string_view clause_id, std::span<const Element> assignment)
{
    const ElementOps ops{s};
    std::optional<bool> result;
    for_each_clause([&](auto c) {
        using C = decltype(c);
        if (C::id != clause_id)
            return;
        if (assignment.size() != C::arity)
            throw Error("clause " + std::string{clause_id} + " takes " + std::to_string(C::arity) + " variables");
        std::array<Element, 3> v{s.zero(), s.zero(), s.zero()};
        std::ranges::copy(assignment, v.begin());
        result = C::eval(ops, v[0], v[1], v[2]);
    });
    if (!result)
        throw Error("unknown clause '" + std::string{clause_id} + "'");
    return *result;
}

} // namespace relalg
