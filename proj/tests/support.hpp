#pragma once

#include "relalg/atom_structure.hpp"
#include "relalg/concrete.hpp"
#include "relalg/oracle.hpp"

#include <algorithm>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

namespace relalg::testing {

inline std::filesystem::path fixture_dir() { return RELALG_FIXTURE_DIR; }

inline std::filesystem::path structure_file(const std::string &name)
{
    return fixture_dir() / "structures" / (name + ".json");
}

inline std::filesystem::path unit_file(const std::string &name) { return fixture_dir() / "units" / (name + ".json"); }

inline Element random_element(std::mt19937_64 &rng, std::size_t width)
{
    const auto mask = full_mask(width);
    return Element{width, rng() & mask};
}

/// Arbitrary tables, almost never axiom-passing; for properties that must
/// hold on every structure.
inline AtomStructure random_structure(std::mt19937_64 &rng, std::size_t n)
{
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i)
        names.push_back("a" + std::to_string(i));
    AtomStructureBuilder b{names};
    std::bernoulli_distribution coin{0.3};
    for (AtomIndex a = 0; a < n; ++a) {
        if (coin(rng))
            b.identity(a);
        if (!coin(rng))
            b.converse(a, static_cast<AtomIndex>(rng() % n));
        for (AtomIndex c = 0; c < n; ++c)
            b.set_comp(a, c, random_element(rng, n));
    }
    b.flags({coin(rng), coin(rng)});
    return b.build();
}

/// Same atoms, names and flags, with the atoms listed in the order perm.
inline AtomStructure permute_atoms(const AtomStructure &s, const std::vector<AtomIndex> &perm)
{
    // new index i holds old atom perm[i]
    std::vector<AtomIndex> where(s.size());
    std::vector<std::string> names(s.size());
    for (AtomIndex i = 0; i < s.size(); ++i) {
        where[perm[i]] = i;
        names[i] = s.name(perm[i]);
    }
    AtomStructureBuilder b{names};
    for (AtomIndex old = 0; old < s.size(); ++old) {
        if (s.is_identity(old))
            b.identity(where[old]);
        if (auto c = s.converse_of(old))
            b.converse(where[old], where[*c]);
        for (AtomIndex old2 = 0; old2 < s.size(); ++old2)
            for (auto r : s.comp(old, old2).atoms())
                b.comp(where[old], where[old2], where[r]);
    }
    b.flags(s.flags());
    return b.build();
}

/// Units of the catalog up to three points that have at least one pair.
inline std::vector<ConcreteUnit> nonempty_catalog(std::size_t max_base)
{
    std::vector<ConcreteUnit> out;
    for (auto &u : unit_catalog(max_base))
        if (!u.pairs.empty())
            out.push_back(std::move(u));
    return out;
}

/// count units drawn from the base-3 catalog with a fixed seed.
inline std::vector<ConcreteUnit> sampled_catalog(std::size_t count, std::uint64_t seed)
{
    auto all = nonempty_catalog(3);
    std::mt19937_64 rng{seed};
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(std::min(count, all.size()));
    return all;
}

class TempDir {
public:
    explicit TempDir(const std::string &tag)
    {
        std::random_device rd;
        path_ = std::filesystem::temp_directory_path() / ("relalg-" + tag + "-" + std::to_string(rd()));
        std::filesystem::create_directories(path_);
    }
    ~TempDir()
    {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir &) = delete;
    TempDir &operator=(const TempDir &) = delete;
    const std::filesystem::path &path() const { return path_; }

private:
    std::filesystem::path path_;
};

} // namespace relalg::testing
