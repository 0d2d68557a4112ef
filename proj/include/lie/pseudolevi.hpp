#pragma once

// Enumeration of pseudo-Levi subgroups up to conjugacy: reflection closures
// of subsets of the extended Dynkin diagram (per simple factor), classified
// by Weyl-orbit canonical form. For each class we record the torsion of
// X/Z(Sigma) (the dual of the component-group side of the centre of the
// centralizer), the admissible characters, and their orbits under the
// normalizer action.

#include "lie/common.hpp"
#include "lie/lattice.hpp"
#include "lie/rootsys.hpp"

namespace lie {

using Coset = std::vector<bigint>;  // dual coordinates, entry i mod torsion factor d_i

struct PseudoLeviClass {
    Subsystem sub;           // canonical representative
    OrbitCanon canon;        // orbit/stabilizer data under the full Weyl group
    bool is_levi = false;
    int levi_envelope = -1;  // class index of q_closure(sub)
    long long dim_m = 0;     // dim of the pseudo-Levi subgroup
    int dim_z0 = 0;          // dim of the central torus of M
    TorsionPresentation torsion;        // torsion(X / Z Sigma)
    std::vector<FinAbHom> stab_duals;   // normalizer action on characters
    std::vector<Coset> admissible;      // admissible characters, sorted
    std::vector<std::vector<Coset>> coset_orbits;  // partition of admissible
    std::string type;        // printable Cartan type of sub
};

namespace detail {

// subgroup of the torsion group generated by the given elements
inline std::vector<std::vector<bigint>> subgroup_generated(
    const std::vector<std::vector<bigint>>& gens, const std::vector<bigint>& factors) {
    std::set<std::vector<bigint>> seen;
    std::vector<bigint> zero(factors.size(), 0);
    seen.insert(zero);
    std::deque<std::vector<bigint>> work{zero};
    while (!work.empty()) {
        auto cur = work.front();
        work.pop_front();
        for (const auto& g : gens) {
            auto nxt = cur;
            for (std::size_t i = 0; i < factors.size(); ++i) nxt[i] = (nxt[i] + g[i]) % factors[i];
            if (seen.insert(nxt).second) work.push_back(nxt);
        }
    }
    return {seen.begin(), seen.end()};
}

} // namespace detail

// A character is admissible when it is faithful on the image of the torsion
// of Q_c / Z Sigma_c for every simple factor c of the ambient group.
class AdmissibilityTest {
  public:
    AdmissibilityTest(const RootSystem& rs, const CharacterLattice& x, const Subsystem& sub,
                      const TorsionPresentation& torsion) {
        factors_ = torsion.factors;
        for (int c = 0; c < rs.num_components(); ++c) {
            int rk = rs.component_type(c).rank;
            Mat rel;
            for (int b : sub.basis) {
                if (rs.root(b).component != c) continue;
                const auto& coords = rs.root(b).coords;
                rel.emplace_back(coords.begin(), coords.end());
            }
            auto tq = quotient_torsion(rel, rk);
            for (int i = 0; i < tq.num_factors(); ++i) {
                // lift generator from Q_c into X, then into torsion(X/ZSigma)
                std::vector<bigint> w(rs.semisimple_rank(), 0);
                // root coords -> weight coords via the Cartan matrix of c
                auto cd = cartan_data(rs.component_type(c));
                int off = rs.global_simple(c, 1);
                for (int jj = 0; jj < rk; ++jj) {
                    bigint v = 0;
                    for (int ii = 0; ii < rk; ++ii) v += tq.lifts[i][ii] * cd.cartan[ii][jj];
                    w[off + jj] = v;
                }
                auto img = torsion.project(x.coords_of(w));
                subgroup_orders_.push_back(tq.factors[i]);
                subgroup_gens_.push_back(img);
                component_of_gen_.push_back(c);
            }
        }
        // precompute each component's subgroup H_c
        for (int c = 0; c < rs.num_components(); ++c) {
            std::vector<std::vector<bigint>> gens;
            for (std::size_t i = 0; i < subgroup_gens_.size(); ++i)
                if (component_of_gen_[i] == c) gens.push_back(subgroup_gens_[i]);
            if (gens.empty()) continue;
            subgroups_.push_back(detail::subgroup_generated(gens, factors_));
        }
    }

    bool admissible(const Coset& p) const {
        for (const auto& h : subgroups_) {
            std::set<std::pair<bigint, bigint>> values;  // (value numerator, order) pairs
            for (const auto& el : h) {
                bigint l = 1;
                for (const auto& di : factors_) l = l / boost::multiprecision::gcd(l, di) * di;
                bigint v = 0;
                for (std::size_t i = 0; i < factors_.size(); ++i)
                    v += p[i] * el[i] * (l / factors_[i]);
                if (l != 0) {
                    v %= l;
                    if (v < 0) v += l;
                }
                values.insert({v, l});
            }
            if (values.size() != h.size()) return false;
        }
        return true;
    }

  private:
    std::vector<bigint> factors_;
    std::vector<bigint> subgroup_orders_;
    std::vector<std::vector<bigint>> subgroup_gens_;
    std::vector<int> component_of_gen_;
    std::vector<std::vector<std::vector<bigint>>> subgroups_;
};

namespace detail {

inline std::vector<Coset> all_cosets(const std::vector<bigint>& factors) {
    std::vector<Coset> out{Coset(factors.size(), 0)};
    for (std::size_t i = 0; i < factors.size(); ++i) {
        std::vector<Coset> next;
        for (const auto& c : out)
            for (bigint v = 0; v < factors[i]; ++v) {
                auto e = c;
                e[i] = v;
                next.push_back(std::move(e));
            }
        out = std::move(next);
    }
    return out;
}

} // namespace detail

// Induced endomorphism of torsion(X/ZSigma) from an X-coordinate matrix.
inline FinAbHom torsion_action(const TorsionPresentation& t, const Mat& xmat) {
    return induced_hom(t, t, [&](const std::vector<bigint>& v) { return row_mul(v, xmat); });
}

// [OP] enumerate_pseudolevis: all pseudo-Levi classes of (G, X).
inline std::vector<PseudoLeviClass> enumerate_pseudolevis(const RootSystem& rs,
                                                          const CharacterLattice& x,
                                                          std::size_t budget = kDefaultOrbitBudget) {
    // candidate node sets: per component, subsets of {extended node, simples}
    std::vector<std::vector<int>> comp_nodes;
    for (int c = 0; c < rs.num_components(); ++c) {
        std::vector<int> nodes{rs.extended_node(c)};
        for (int i = 1; i <= rs.component_type(c).rank; ++i)
            nodes.push_back(rs.simple_root_index(c, i));
        comp_nodes.push_back(std::move(nodes));
    }
    // iterate the product of per-component subsets
    std::vector<std::vector<int>> subsets{{}};
    for (const auto& nodes : comp_nodes) {
        std::vector<std::vector<int>> next;
        std::size_t m = nodes.size();
        for (std::size_t mask = 0; mask < (std::size_t(1) << m); ++mask) {
            for (const auto& base : subsets) {
                auto s = base;
                for (std::size_t i = 0; i < m; ++i)
                    if (mask & (std::size_t(1) << i)) s.push_back(nodes[i]);
                next.push_back(std::move(s));
            }
        }
        subsets = std::move(next);
    }

    std::map<std::vector<int>, PseudoLeviClass> classes;
    for (const auto& j : subsets) {
        auto closed = rs.reflection_closure(j);
        auto oc = canonicalize_subsystem(rs.simple_reflection_perms(), closed, budget);
        if (classes.count(oc.canonical)) continue;
        PseudoLeviClass pl;
        pl.sub = rs.analyze_subsystem(oc.canonical);
        pl.type = subsystem_type_string(pl.sub.factors);
        pl.canon = std::move(oc);
        classes.emplace(pl.canon.canonical, std::move(pl));
    }

    std::vector<PseudoLeviClass> out;
    for (auto& [k, v] : classes) out.push_back(std::move(v));
    // deterministic order: rank descending, then type, then canonical roots
    std::sort(out.begin(), out.end(), [](const PseudoLeviClass& a, const PseudoLeviClass& b) {
        return std::tie(b.sub.rank, a.type, a.sub.roots) < std::tie(a.sub.rank, b.type, b.sub.roots);
    });

    std::map<std::vector<int>, int> index_of;
    for (std::size_t i = 0; i < out.size(); ++i) index_of[out[i].sub.roots] = static_cast<int>(i);

    for (auto& pl : out) {
        pl.dim_m = static_cast<long long>(pl.sub.roots.size()) + rs.total_rank();
        pl.dim_z0 = rs.total_rank() - pl.sub.rank;
        auto env = rs.q_closure(pl.sub.roots);
        pl.is_levi = env.roots == pl.sub.roots;
        auto env_canon = weyl_canonical(rs, env.roots, budget);
        auto it = index_of.find(env_canon.canonical);
        if (it == index_of.end()) throw std::logic_error("levi envelope not among the classes");
        pl.levi_envelope = it->second;

        pl.torsion = quotient_torsion(x.roots_in_x(rs, pl.sub.basis), rs.semisimple_rank());

        // normalizer action on characters
        std::vector<int> gen_roots;
        for (int g = 0; g < rs.num_simples(); ++g) {
            auto [c, i] = rs.global_to_component(g);
            gen_roots.push_back(rs.simple_root_index(c, i));
        }
        for (const auto& w : pl.canon.stab_words) {
            Mat m = x.word_matrix_x(rs, w, gen_roots);
            auto act = torsion_action(pl.torsion, m);
            pl.stab_duals.push_back(dual_hom(act, pl.torsion.factors, pl.torsion.factors));
        }

        AdmissibilityTest adm(rs, x, pl.sub, pl.torsion);
        for (auto& c : detail::all_cosets(pl.torsion.factors))
            if (adm.admissible(c)) pl.admissible.push_back(std::move(c));
        std::sort(pl.admissible.begin(), pl.admissible.end());

        // the trivial character is admissible exactly for genuine Levis
        bool trivial_adm = !pl.admissible.empty() &&
                           std::all_of(pl.admissible[0].begin(), pl.admissible[0].end(),
                                       [](const bigint& v) { return v == 0; });
        if (trivial_adm != pl.is_levi)
            throw std::logic_error("admissibility of the trivial character contradicts is_levi");

        // orbits of the admissible set under the dual normalizer action
        std::set<Coset> remaining(pl.admissible.begin(), pl.admissible.end());
        while (!remaining.empty()) {
            std::set<Coset> orbit;
            std::deque<Coset> work{*remaining.begin()};
            orbit.insert(*remaining.begin());
            while (!work.empty()) {
                auto cur = work.front();
                work.pop_front();
                for (const auto& h : pl.stab_duals) {
                    auto im = h.apply(cur, pl.torsion.factors);
                    if (!remaining.count(im) && !orbit.count(im))
                        throw std::logic_error("normalizer action does not preserve admissibility");
                    if (orbit.insert(im).second) work.push_back(im);
                }
            }
            std::vector<Coset> o(orbit.begin(), orbit.end());
            for (const auto& e : o) remaining.erase(e);
            pl.coset_orbits.push_back(std::move(o));
        }
        std::sort(pl.coset_orbits.begin(), pl.coset_orbits.end());
    }
    return out;
}

// [OP] classify_subsystem: index of the class of a reflection-closed set.
inline int classify_subsystem(const RootSystem& rs, const std::vector<PseudoLeviClass>& classes,
                              const std::vector<int>& closed,
                              std::size_t budget = kDefaultOrbitBudget) {
    auto oc = weyl_canonical(rs, closed, budget);
    for (std::size_t i = 0; i < classes.size(); ++i)
        if (classes[i].sub.roots == oc.canonical) return static_cast<int>(i);
    return -1;
}

// A Levi subsystem class of a pseudo-Levi M, up to W(Sigma_M)-conjugacy.
struct LeviOfClass {
    std::vector<int> nodes;   // chosen subset of basis(Sigma_M) (representative)
    Subsystem sub;            // its reflection closure, analyzed
    OrbitCanon canon_in_m;    // canonicalization under W(Sigma_M)
};

// [OP] levis_of: Levi subsystems of M (standard subsets of its simple
// system), deduplicated under the Weyl group of Sigma_M.
inline std::vector<LeviOfClass> levis_of(const RootSystem& rs, const Subsystem& sigma,
                                         std::size_t budget = kDefaultOrbitBudget) {
    std::vector<std::vector<int>> gens;
    for (int b : sigma.basis) gens.push_back(rs.reflection_perm(b));
    std::vector<LeviOfClass> out;
    std::set<std::vector<int>> seen;
    int k = sigma.rank;
    for (std::size_t mask = 0; mask < (std::size_t(1) << k); ++mask) {
        std::vector<int> nodes;
        for (int i = 0; i < k; ++i)
            if (mask & (std::size_t(1) << i)) nodes.push_back(sigma.basis[i]);
        auto closed = rs.reflection_closure(nodes);
        auto oc = canonicalize_subsystem(gens, closed, budget);
        if (!seen.insert(oc.canonical).second) continue;
        LeviOfClass l;
        l.nodes = std::move(nodes);
        l.sub = rs.analyze_subsystem(closed);
        l.canon_in_m = std::move(oc);
        out.push_back(std::move(l));
    }
    std::sort(out.begin(), out.end(), [](const LeviOfClass& a, const LeviOfClass& b) {
        return std::tie(a.sub.rank, a.canon_in_m.canonical) <
               std::tie(b.sub.rank, b.canon_in_m.canonical);
    });
    return out;
}

} // namespace lie
