#pragma once

// Jordan classes and sheets. A Jordan class is determined by a pseudo-Levi
// class M, an admissible character of the component group of Z(M), and a
// rigid-or-not unipotent class per simple factor of M; two such data sets give
// the same class exactly when the normalizer of M relates them, so we take
// orbits of (character, orbit tuple) pairs under the stabilizer action.
// Sheets are the classes whose unipotent part is rigid in every factor.

#include <functional>
#include <optional>

#include "lie/common.hpp"
#include "lie/lattice.hpp"
#include "lie/pseudolevi.hpp"
#include "lie/rootsys.hpp"
#include "lie/unipotent.hpp"

namespace lie {

using OrbitTuple = std::vector<UnipotentClass>;  // aligned with Subsystem::factors
using JordanPair = std::pair<Coset, OrbitTuple>;

inline int apply_word_to_root(const std::vector<std::vector<int>>& gens,
                              const std::vector<int>& word, int r) {
    for (int g : word) r = gens[g][r];
    return r;
}

// Node correspondence of a Weyl-equivariant root map phi carrying the factor
// `from` onto the factor `to`: phi(from.nodes) is a simple system of `to`'s
// root system, which a sequence of reflections in to's nodes moves back onto
// to.nodes. Returns sigma with sigma[i-1] = the to-position of from-node i.
inline std::vector<int> diagram_correspondence(const RootSystem& rs, const SubFactor& from,
                                               const SubFactor& to,
                                               const std::function<int(int)>& phi) {
    using rational = boost::multiprecision::cpp_rational;
    const int k = static_cast<int>(from.nodes.size());
    const int n = rs.semisimple_rank();
    std::vector<int> scur;
    for (int r : from.nodes) scur.push_back(phi(r));

    // coordinates of root r in the simple system `basis` (weight coordinates)
    auto coords_in = [&](const std::vector<int>& basis, int r) {
        std::vector<std::vector<rational>> a(n, std::vector<rational>(k + 1, 0));
        for (int j = 0; j < k; ++j) {
            auto w = rs.weight_coords(basis[j]);
            for (int i = 0; i < n; ++i) a[i][j] = w[i];
        }
        auto wr = rs.weight_coords(r);
        for (int i = 0; i < n; ++i) a[i][k] = wr[i];
        std::vector<int> where(k, -1);
        int row = 0;
        for (int col = 0; col < k && row < n; ++col) {
            int piv = -1;
            for (int i = row; i < n; ++i)
                if (a[i][col] != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0) throw std::logic_error("diagram_correspondence: degenerate simple system");
            std::swap(a[piv], a[row]);
            for (int i = 0; i < n; ++i) {
                if (i == row || a[i][col] == 0) continue;
                rational f = a[i][col] / a[row][col];
                for (int c = col; c <= k; ++c) a[i][c] -= f * a[row][c];
            }
            where[col] = row++;
        }
        for (int i = row; i < n; ++i)
            if (a[i][k] != 0)
                throw std::logic_error("diagram_correspondence: root outside the factor span");
        std::vector<rational> c(k);
        for (int col = 0; col < k; ++col) c[col] = a[where[col]][k] / a[where[col]][col];
        return c;
    };

    for (int guard = 0;; ++guard) {
        if (guard > 4 * rs.num_roots())
            throw std::logic_error("diagram_correspondence: descent did not converge");
        int neg = -1;
        for (int d : to.nodes) {
            auto c = coords_in(scur, d);
            bool nonpos = true;
            for (const auto& v : c)
                if (v > 0) nonpos = false;
            if (nonpos) {
                neg = d;
                break;
            }
        }
        if (neg < 0) break;
        const auto& p = rs.reflection_perm(neg);
        for (auto& r : scur) r = p[r];
    }
    std::vector<int> sigma(k);
    for (int i = 0; i < k; ++i) {
        auto it = std::find(to.nodes.begin(), to.nodes.end(), scur[i]);
        if (it == to.nodes.end())
            throw std::logic_error("diagram_correspondence: simple systems do not align");
        sigma[i] = static_cast<int>(it - to.nodes.begin()) + 1;
    }
    return sigma;
}

// Image of a class of a simple factor under a diagram symmetry sigma. Only
// type D has symmetries acting nontrivially on classes: the fork swap flips
// very even decorations, and in D4 the end nodes 1/3/4 may be permuted
// arbitrarily. Every D4 class whose dimension is shared is induced from a
// Levi omitting exactly one end node ([2,2,2,2]'/[4,4]' omit node 4, the
// double-primed versions omit node 3, the undecorated partners omit node 1),
// so the symmetry relabels them through its action on end nodes.
inline UnipotentClass transport_class(SimpleType t, const std::vector<int>& sigma,
                                      const UnipotentClass& cls,
                                      const std::vector<UnipotentClass>& list) {
    if (t.letter != Letter::D) return cls;
    const int m = t.rank;
    bool ident = true;
    for (int i = 0; i < m; ++i)
        if (sigma[i] != i + 1) ident = false;
    if (ident) return cls;
    if (m > 4) {
        if (sigma[m - 2] != m || sigma[m - 1] != m - 1)
            throw std::logic_error("transport_class: unexpected symmetry in type D");
        auto out = cls;
        if (out.decoration) out.decoration = 3 - out.decoration;
        return out;
    }
    int e;
    if (cls.decoration == 1) e = 4;
    else if (cls.decoration == 2) e = 3;
    else {
        bool ambiguous = false;
        for (const auto& u : list)
            if (u.decoration && u.dim == cls.dim) ambiguous = true;
        if (!ambiguous) return cls;
        e = 1;
    }
    int ep = sigma[e - 1];
    for (const auto& u : list) {
        if (u.dim != cls.dim) continue;
        if ((ep == 1 && u.decoration == 0) || (ep == 4 && u.decoration == 1) ||
            (ep == 3 && u.decoration == 2))
            return u;
    }
    throw std::logic_error("transport_class: no matching class");
}

// How a root map phi matches the factors of `from` with those of `to`.
struct FactorTransport {
    std::vector<int> image;               // from-factor i lands in to-factor image[i]
    std::vector<std::vector<int>> sigma;  // node correspondence per from-factor
};

inline FactorTransport factor_transport(const RootSystem& rs, const Subsystem& from,
                                        const Subsystem& to, const std::function<int(int)>& phi) {
    if (from.factors.size() != to.factors.size())
        throw std::logic_error("factor_transport: factor count mismatch");
    FactorTransport ft;
    for (const auto& f : from.factors) {
        int img = phi(f.nodes[0]);
        int which = -1;
        for (std::size_t j = 0; j < to.factors.size(); ++j)
            for (int node : to.factors[j].nodes)
                if (rs.bilinear(img, node) != 0) which = static_cast<int>(j);
        if (which < 0) throw std::logic_error("factor_transport: image factor not found");
        const auto& g = to.factors[which];
        if (f.type.letter != g.type.letter || f.type.rank != g.type.rank)
            throw std::logic_error("factor_transport: factor types differ");
        ft.image.push_back(which);
        ft.sigma.push_back(diagram_correspondence(rs, f, g, phi));
    }
    return ft;
}

inline OrbitTuple apply_factor_transport(const Subsystem& from, const FactorTransport& ft,
                                         const UnipotentCatalog& cat, const OrbitTuple& cls) {
    OrbitTuple out(cls.size());
    for (std::size_t i = 0; i < cls.size(); ++i)
        out[ft.image[i]] = transport_class(from.factors[i].type, ft.sigma[i], cls[i],
                                           cat.classes(from.factors[i].type));
    return out;
}

// Align a very even class of a Levi D-factor with the position order the
// induction code uses: its decoration refers to the factor's own fork
// order, which may differ from the ambient one.
inline UnipotentClass align_decoration(const SubFactor& f, const std::vector<int>& positions,
                                       const SubFactor& ambient, UnipotentClass cls) {
    if (cls.decoration == 0 || f.type.letter != Letter::D) return cls;
    int l = f.type.rank;
    int last_pos = positions[l - 1];
    if (f.nodes[l - 1] != ambient.nodes[last_pos - 1]) cls.decoration = 3 - cls.decoration;
    return cls;
}

// [OP] induce_between: induce classes on the factors of a Levi subsystem up
// to the factors of an ambient subsystem containing it. The Levi's basis
// must be a subset of the union of the ambient factors' node sets.
inline OrbitTuple induce_between(const Subsystem& amb, const Subsystem& levi,
                                 const OrbitTuple& cls) {
    OrbitTuple out;
    for (const auto& fa : amb.factors) {
        std::vector<FactorLeviPart> parts;
        for (std::size_t i = 0; i < levi.factors.size(); ++i) {
            const auto& f = levi.factors[i];
            auto it = std::find(fa.nodes.begin(), fa.nodes.end(), f.nodes[0]);
            if (it == fa.nodes.end()) continue;
            std::vector<int> positions;
            for (int node : f.nodes) {
                auto jt = std::find(fa.nodes.begin(), fa.nodes.end(), node);
                if (jt == fa.nodes.end())
                    throw std::logic_error("induce_between: factor split across components");
                positions.push_back(static_cast<int>(jt - fa.nodes.begin()) + 1);
            }
            auto sorted = positions;
            std::sort(sorted.begin(), sorted.end());
            auto u = align_decoration(f, sorted, fa, cls[i]);
            parts.push_back({std::move(sorted), std::move(u)});
        }
        out.push_back(induce_in_factor(fa.type, std::move(parts)));
    }
    return out;
}

struct JordanClass {
    int pl = -1;                     // index into the pseudo-Levi classes
    Coset coset;                     // representative admissible character
    OrbitTuple orbit;                // representative class per factor of M
    std::vector<JordanPair> members; // the full stabilizer orbit of pairs
    long long n = 0;                 // dimension of the G-orbits in the class
    long long dim = 0;               // n + dim of the central torus of M
    bool rigid = false;              // every factor class rigid
};

struct Sheet {
    int jordan = -1;  // the class whose regular closure the sheet is
    long long n = 0;
    long long dim = 0;
    bool dixmier = false;                   // trivial unipotent part
    bool unipotent_up_to_center = false;    // M is a genuine Levi subgroup
    bool genuine_unipotent = false;         // ... with the trivial character
    bool single_class = false;              // the sheet is one conjugacy class
    std::optional<OrbitTuple> induced;      // Ind_M^G of the unipotent part,
                                            // per ambient component (Levi M,
                                            // classical ambient only)
};

struct SemisimpleLocation {
    int jordan = -1;
    std::vector<int> sheets;  // all sheets containing the element
};

class Classification {
  public:
    explicit Classification(GroupSpec spec, std::optional<std::string> data_dir = std::nullopt,
                            std::size_t budget = kDefaultOrbitBudget)
        : spec_(normalize_spec(std::move(spec))),
          rs_(spec_),
          x_(rs_, spec_),
          cat_(std::move(data_dir)),
          budget_(budget) {
        pls_ = enumerate_pseudolevis(rs_, x_, budget_);
        for (int g = 0; g < rs_.num_simples(); ++g) {
            auto [c, i] = rs_.global_to_component(g);
            gen_roots_.push_back(rs_.simple_root_index(c, i));
        }
    }

    const GroupSpec& spec() const { return spec_; }
    const RootSystem& root_system() const { return rs_; }
    const CharacterLattice& lattice() const { return x_; }
    const UnipotentCatalog& catalog() const { return cat_; }
    const std::vector<PseudoLeviClass>& pseudo_levis() const { return pls_; }

    // [OP] enumerate_jordan_classes
    const std::vector<JordanClass>& jordan_classes() {
        if (jordan_built_) return jordan_;
        for (int pi = 0; pi < static_cast<int>(pls_.size()); ++pi) build_jordan_for(pi);
        jordan_built_ = true;
        return jordan_;
    }

    // [OP] jordan_leq: is a contained in the closure of b (both regular there)?
    bool jordan_leq(int a, int b) { return leq_witness(a, b).leq; }

    struct LeqWitness {
        bool leq = false;
        int levi = -1;  // index into levis_of(M_a) realizing M_b
        Coset ta, tb;   // matching member characters
    };

    LeqWitness leq_witness(int a, int b) {
        require_classical("the Jordan class order");
        jordan_classes();
        const auto& ja = jordan_.at(a);
        const auto& jb = jordan_.at(b);
        if (a == b) return {true, -1, ja.coset, jb.coset};
        const auto& m1 = pls_[ja.pl];
        const auto& m2 = pls_[jb.pl];
        if (ja.n != jb.n) return {};
        if (m2.sub.rank > m1.sub.rank || m2.sub.roots.size() > m1.sub.roots.size()) return {};

        const auto& levis = levis_cache(ja.pl);
        for (int li = 0; li < static_cast<int>(levis.size()); ++li) {
            const auto& canon = levi_full_canon(ja.pl, li);
            if (canon.canonical != m2.sub.roots) continue;
            const auto& lv = levis[li];

            TorsionPresentation tk =
                quotient_torsion(x_.roots_in_x(rs_, lv.sub.basis), rs_.semisimple_rank());
            // restriction of characters of Z(M1) to Z of the Levi copy
            FinAbHom restr = dual_hom(induced_hom(tk, m1.torsion), tk.factors, m1.torsion.factors);
            // transport of characters along the word K -> canonical M2
            Mat wm = x_.word_matrix_x(rs_, canon.word, gen_roots_);
            FinAbHom fwd = induced_hom(tk, m2.torsion,
                                       [&](const std::vector<bigint>& v) { return row_mul(v, wm); });
            FinAbHom pull = dual_hom(fwd, tk.factors, m2.torsion.factors);
            // the matching pullback of classes, canonical M2 -> K
            std::vector<int> rev(canon.word.rbegin(), canon.word.rend());
            auto phi = [&](int r) {
                return apply_word_to_root(rs_.simple_reflection_perms(), rev, r);
            };
            FactorTransport ft = factor_transport(rs_, m2.sub, lv.sub, phi);

            for (const auto& [t2, o2] : jb.members) {
                auto tk2 = pull.apply(t2, tk.factors);
                auto ok2 = apply_factor_transport(m2.sub, ft, cat_, o2);
                auto ind = induce_between(m1.sub, lv.sub, ok2);
                for (const auto& [t1, o1] : ja.members) {
                    if (o1 != ind) continue;
                    if (restr.apply(t1, tk.factors) != tk2) continue;
                    return {true, li, t1, t2};
                }
            }
        }
        return {};
    }

    // [OP] maximal_jordan_classes: the classes maximal in the closure order.
    std::vector<int> maximal_jordan() {
        std::vector<int> out;
        const auto& jc = jordan_classes();
        for (int i = 0; i < static_cast<int>(jc.size()); ++i)
            if (jc[i].rigid) out.push_back(i);
        return out;
    }

    // [OP] enumerate_sheets
    const std::vector<Sheet>& sheets() {
        if (sheets_built_) return sheets_;
        jordan_classes();
        for (int ji : maximal_jordan()) {
            const auto& j = jordan_[ji];
            const auto& pl = pls_[j.pl];
            Sheet s;
            s.jordan = ji;
            s.n = j.n;
            s.dim = j.dim;
            s.dixmier = true;
            for (const auto& u : j.orbit)
                if (u.dim != 0) s.dixmier = false;
            s.unipotent_up_to_center = pl.is_levi;
            for (const auto& [t, o] : j.members) {
                bool trivial = std::all_of(t.begin(), t.end(),
                                           [](const bigint& v) { return v == 0; });
                if (trivial) s.genuine_unipotent = true;
            }
            s.single_class = pl.dim_z0 == 0;
            if (pl.is_levi && classical_ambient()) s.induced = induce_to_ambient(j);
            sheets_.push_back(std::move(s));
        }
        sheets_built_ = true;
        return sheets_;
    }

    // [OP] sheet_of_semisimple: locate a semisimple element given as a
    // pseudo-Levi class index (its centralizer) plus an admissible character.
    SemisimpleLocation sheet_of_semisimple(int pl, const Coset& t) {
        require_classical("sheet membership");
        jordan_classes();
        if (pl < 0 || pl >= static_cast<int>(pls_.size()))
            throw UsageError("sheet_of_semisimple: no such pseudo-Levi class");
        SemisimpleLocation loc;
        for (int i = 0; i < static_cast<int>(jordan_.size()); ++i) {
            const auto& j = jordan_[i];
            if (j.pl != pl) continue;
            bool trivial_orbit = true;
            for (const auto& u : j.orbit)
                if (u.dim != 0) trivial_orbit = false;
            if (!trivial_orbit) continue;
            for (const auto& [tt, o] : j.members)
                if (tt == t) loc.jordan = i;
        }
        if (loc.jordan < 0)
            throw UsageError("sheet_of_semisimple: the character is not admissible for the class");
        const auto& sh = sheets();
        for (int si = 0; si < static_cast<int>(sh.size()); ++si)
            if (jordan_leq(loc.jordan, sh[si].jordan)) loc.sheets.push_back(si);
        return loc;
    }

    // Full order relation; leq[a][b] means a lies in the closure of b.
    const std::vector<std::vector<char>>& order_matrix() {
        if (!order_.empty()) return order_;
        int nn = static_cast<int>(jordan_classes().size());
        order_.assign(nn, std::vector<char>(nn, 0));
        for (int a = 0; a < nn; ++a)
            for (int b = 0; b < nn; ++b) order_[a][b] = jordan_leq(a, b) ? 1 : 0;
        for (int a = 0; a < nn; ++a)
            for (int b = a + 1; b < nn; ++b)
                if (order_[a][b] && order_[b][a])
                    throw std::logic_error("order_matrix: distinct comparable classes coincide");
        return order_;
    }

    // Cover relations of the closure order, as (lower, upper) pairs.
    std::vector<std::pair<int, int>> hasse() {
        const auto& m = order_matrix();
        int nn = static_cast<int>(m.size());
        std::vector<std::pair<int, int>> out;
        for (int a = 0; a < nn; ++a)
            for (int b = 0; b < nn; ++b) {
                if (a == b || !m[a][b]) continue;
                bool cover = true;
                for (int c = 0; c < nn && cover; ++c)
                    if (c != a && c != b && m[a][c] && m[c][b]) cover = false;
                if (cover) out.emplace_back(a, b);
            }
        return out;
    }

    bool classical_ambient() const {
        for (int c = 0; c < rs_.num_components(); ++c) {
            Letter l = rs_.component_type(c).letter;
            if (l == Letter::E || l == Letter::F || l == Letter::G) return false;
        }
        return true;
    }

  private:
    void require_classical(const std::string& what) const {
        if (!classical_ambient())
            throw CapabilityError(what + " is only available for classical ambient types");
    }

    void build_jordan_for(int pi) {
        const auto& pl = pls_[pi];
        // generator actions on (character, class tuple) pairs: the character
        // moves by the dual action, the classes by the inverse root map
        struct GenAct {
            const FinAbHom* dual;
            FactorTransport ft;
        };
        std::vector<GenAct> acts;
        for (std::size_t g = 0; g < pl.canon.stab_words.size(); ++g) {
            std::vector<int> rev(pl.canon.stab_words[g].rbegin(), pl.canon.stab_words[g].rend());
            auto phi = [&](int r) {
                return apply_word_to_root(rs_.simple_reflection_perms(), rev, r);
            };
            acts.push_back({&pl.stab_duals[g], factor_transport(rs_, pl.sub, pl.sub, phi)});
        }

        std::vector<OrbitTuple> tuples{{}};
        for (const auto& f : pl.sub.factors) {
            std::vector<OrbitTuple> next;
            for (const auto& base : tuples)
                for (const auto& u : cat_.classes(f.type)) {
                    auto v = base;
                    v.push_back(u);
                    next.push_back(std::move(v));
                }
            tuples = std::move(next);
        }

        std::set<JordanPair> remaining;
        for (const auto& t : pl.admissible)
            for (const auto& o : tuples) remaining.insert({t, o});

        while (!remaining.empty()) {
            JordanPair seed = *remaining.begin();
            std::set<JordanPair> orbit{seed};
            std::deque<JordanPair> work{seed};
            while (!work.empty()) {
                auto [t, o] = work.front();
                work.pop_front();
                for (const auto& act : acts) {
                    JordanPair im{act.dual->apply(t, pl.torsion.factors),
                                  apply_factor_transport(pl.sub, act.ft, cat_, o)};
                    if (!remaining.count(im) && !orbit.count(im))
                        throw std::logic_error("jordan class orbit leaves the pair space");
                    if (orbit.insert(im).second) work.push_back(im);
                }
            }
            JordanClass j;
            j.pl = pi;
            j.coset = orbit.begin()->first;
            j.orbit = orbit.begin()->second;
            j.members.assign(orbit.begin(), orbit.end());
            long long dim_o = 0;
            j.rigid = true;
            for (const auto& u : j.orbit) {
                dim_o += u.dim;
                if (!u.rigid) j.rigid = false;
            }
            for (const auto& [t, o] : orbit) {
                long long d = 0;
                bool r = true;
                for (const auto& u : o) {
                    d += u.dim;
                    if (!u.rigid) r = false;
                }
                if (d != dim_o || r != j.rigid)
                    throw std::logic_error("jordan class members disagree on dimension/rigidity");
                remaining.erase({t, o});
            }
            j.n = rs_.dim_g() - pl.dim_m + dim_o;
            j.dim = j.n + pl.dim_z0;
            jordan_.push_back(std::move(j));
        }
    }

    // Ind_M^G of the unipotent part of a Jordan class with M a genuine Levi;
    // one class per ambient simple component.
    OrbitTuple induce_to_ambient(const JordanClass& j) {
        const auto& pl = pls_[j.pl];
        if (full_levis_.empty()) {
            std::vector<int> all(rs_.num_roots());
            for (int i = 0; i < rs_.num_roots(); ++i) all[i] = i;
            full_sub_ = rs_.analyze_subsystem(all);
            full_levis_ = levis_of(rs_, full_sub_, budget_);
        }
        const LeviOfClass* match = nullptr;
        for (const auto& lv : full_levis_)
            if (lv.canon_in_m.canonical == pl.sub.roots) match = &lv;
        if (!match) throw std::logic_error("induce_to_ambient: Levi class not found");

        // pull the classes back from the canonical form to the standard copy
        std::vector<std::vector<int>> gens;
        for (int b : full_sub_.basis) gens.push_back(rs_.reflection_perm(b));
        std::vector<int> rev(match->canon_in_m.word.rbegin(), match->canon_in_m.word.rend());
        auto phi = [&](int r) { return apply_word_to_root(gens, rev, r); };
        OrbitTuple std_cls;
        if (!pl.sub.factors.empty()) {
            FactorTransport ft = factor_transport(rs_, pl.sub, match->sub, phi);
            std_cls = apply_factor_transport(pl.sub, ft, cat_, j.orbit);
        }

        // group the standard Levi factors by ambient component
        OrbitTuple out;
        std::vector<std::vector<FactorLeviPart>> parts(rs_.num_components());
        for (std::size_t i = 0; i < match->sub.factors.size(); ++i) {
            const auto& f = match->sub.factors[i];
            int comp = rs_.root(f.nodes[0]).component;
            std::vector<int> positions;
            for (int node : f.nodes) {
                int pos = -1;
                for (int k = 1; k <= rs_.component_type(comp).rank; ++k)
                    if (rs_.simple_root_index(comp, k) == node) pos = k;
                if (pos < 0) throw std::logic_error("induce_to_ambient: node is not simple");
                positions.push_back(pos);
            }
            auto sorted = positions;
            std::sort(sorted.begin(), sorted.end());
            SubFactor ambf;  // stand-in with the component's simple roots in order
            ambf.type = rs_.component_type(comp);
            for (int k = 1; k <= ambf.type.rank; ++k)
                ambf.nodes.push_back(rs_.simple_root_index(comp, k));
            auto u = align_decoration(f, sorted, ambf, std_cls[i]);
            parts[comp].push_back({std::move(sorted), std::move(u)});
        }
        long long total = 0;
        for (int c = 0; c < rs_.num_components(); ++c) {
            out.push_back(induce_in_factor(rs_.component_type(c), std::move(parts[c])));
            total += out.back().dim;
        }
        if (rs_.num_components() && total != j.n)
            throw std::logic_error("induce_to_ambient: dimension does not match the class");
        return out;
    }

    const std::vector<LeviOfClass>& levis_cache(int pl) {
        auto it = levis_.find(pl);
        if (it != levis_.end()) return it->second;
        return levis_.emplace(pl, levis_of(rs_, pls_[pl].sub, budget_)).first->second;
    }

    const OrbitCanon& levi_full_canon(int pl, int li) {
        auto key = std::make_pair(pl, li);
        auto it = levi_canon_.find(key);
        if (it != levi_canon_.end()) return it->second;
        const auto& lv = levis_cache(pl)[li];
        return levi_canon_.emplace(key, weyl_canonical(rs_, lv.sub.roots, budget_)).first->second;
    }

    GroupSpec spec_;
    RootSystem rs_;
    CharacterLattice x_;
    UnipotentCatalog cat_;
    std::size_t budget_;
    std::vector<PseudoLeviClass> pls_;
    std::vector<int> gen_roots_;

    bool jordan_built_ = false;
    std::vector<JordanClass> jordan_;
    bool sheets_built_ = false;
    std::vector<Sheet> sheets_;
    std::vector<std::vector<char>> order_;
    std::map<int, std::vector<LeviOfClass>> levis_;
    std::map<std::pair<int, int>, OrbitCanon> levi_canon_;
    Subsystem full_sub_;
    std::vector<LeviOfClass> full_levis_;
};

} // namespace lie
