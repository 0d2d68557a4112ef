#pragma once

// Exact integer model of (products of) irreducible root systems: Cartan
// matrices, closure generation of roots, reflections, Q-closure, simple
// systems of subsystems, Cartan-type recognition and Weyl-orbit
// canonicalization of subsystems.

#include "lie/common.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>
#include <limits>
#include <map>
#include <set>
#include <numeric>
#include <optional>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace lie {

enum class Letter : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

inline char letter_char(Letter l) { return static_cast<char>(l); }

struct SimpleType {
    Letter letter;
    int rank;
    friend auto operator<=>(const SimpleType&, const SimpleType&) = default;
};

inline std::string type_string(SimpleType t) {
    return std::string(1, letter_char(t.letter)) + std::to_string(t.rank);
}

enum class Isogeny { adjoint, simply_connected, intermediate };

struct GroupSpec {
    std::vector<SimpleType> factors;
    Isogeny isogeny = Isogeny::adjoint;
    // Generators of the subgroup X/Q of P/Q, as weight-basis coordinate
    // vectors over the whole semisimple part (only for intermediate).
    std::vector<std::vector<int>> lattice_gens;
    int central_torus_rank = 0;
};

inline bool valid_type(SimpleType t) {
    switch (t.letter) {
        case Letter::A: return t.rank >= 1;
        case Letter::B: return t.rank >= 2;
        case Letter::C: return t.rank >= 2;
        case Letter::D: return t.rank >= 2;
        case Letter::E: return t.rank >= 6 && t.rank <= 8;
        case Letter::F: return t.rank == 4;
        case Letter::G: return t.rank == 2;
    }
    return false;
}

// D2 is reducible; split it so every stored factor is irreducible.
inline GroupSpec normalize_spec(GroupSpec spec) {
    std::vector<SimpleType> out;
    for (auto t : spec.factors) {
        if (!valid_type(t))
            throw UsageError("invalid simple type: " + type_string(t));
        if (t.letter == Letter::D && t.rank == 2) {
            out.push_back({Letter::A, 1});
            out.push_back({Letter::A, 1});
        } else {
            out.push_back(t);
        }
    }
    if (out.empty() && spec.central_torus_rank == 0)
        throw UsageError("empty group specification");
    spec.factors = std::move(out);
    return spec;
}

// Cartan matrix convention: cartan[i][j] = <alpha_i, alpha_j^vee>.
// d[i] = (alpha_i, alpha_i)/2, integral symmetrizers.
struct CartanData {
    std::vector<std::vector<int>> cartan;
    std::vector<int> d;
};

inline CartanData cartan_data(SimpleType t) {
    const int n = t.rank;
    CartanData cd;
    cd.cartan.assign(n, std::vector<int>(n, 0));
    cd.d.assign(n, 1);
    auto& C = cd.cartan;
    for (int i = 0; i < n; ++i) C[i][i] = 2;
    auto chain = [&](int i, int j) { C[i][j] = -1; C[j][i] = -1; };
    switch (t.letter) {
        case Letter::A:
            for (int i = 0; i + 1 < n; ++i) chain(i, i + 1);
            break;
        case Letter::B:
            for (int i = 0; i + 2 < n; ++i) chain(i, i + 1);
            C[n - 2][n - 1] = -2;  // alpha_{n-1} long, alpha_n short
            C[n - 1][n - 2] = -1;
            for (int i = 0; i + 1 < n; ++i) cd.d[i] = 2;
            break;
        case Letter::C:
            for (int i = 0; i + 2 < n; ++i) chain(i, i + 1);
            C[n - 2][n - 1] = -1;  // alpha_n long
            C[n - 1][n - 2] = -2;
            cd.d[n - 1] = 2;
            break;
        case Letter::D:
            for (int i = 0; i + 3 < n; ++i) chain(i, i + 1);
            chain(n - 3, n - 2);
            chain(n - 3, n - 1);
            break;
        case Letter::E: {
            // Bourbaki: chain 1-3-4-5-6(-7-8), node 2 hangs off node 4.
            chain(0, 2);
            chain(2, 3);
            chain(1, 3);
            for (int i = 3; i + 1 < n; ++i) chain(i, i + 1);
            break;
        }
        case Letter::F:
            chain(0, 1);
            C[1][2] = -2;  // alpha_1, alpha_2 long; alpha_3, alpha_4 short
            C[2][1] = -1;
            chain(2, 3);
            cd.d[0] = cd.d[1] = 2;
            break;
        case Letter::G:
            C[0][1] = -1;  // alpha_1 short, alpha_2 long
            C[1][0] = -3;
            cd.d[1] = 3;
            break;
    }
    return cd;
}

struct Root {
    int component = 0;
    std::vector<int> coords;  // simple-root basis of its component
    friend bool operator==(const Root&, const Root&) = default;
};

enum class LengthTag { none, long_, short_ };

// One irreducible factor of a subsystem, with its basis in Bourbaki order.
struct SubFactor {
    SimpleType type;
    LengthTag tag = LengthTag::none;
    std::vector<int> nodes;  // root indices, Bourbaki-ordered
};

inline std::string factor_string(const SubFactor& f) {
    std::string s = type_string(f.type);
    if (f.tag == LengthTag::long_) s += "(long)";
    if (f.tag == LengthTag::short_) s += "(short)";
    return s;
}

struct Subsystem {
    std::vector<int> roots;   // sorted root indices, reflection-closed
    std::vector<int> basis;   // simple system (root indices)
    std::vector<SubFactor> factors;
    int rank = 0;

    friend bool operator==(const Subsystem& a, const Subsystem& b) { return a.roots == b.roots; }
};

namespace detail {
struct ComponentData {
    SimpleType type;
    CartanData cd;
    int simple_offset = 0;  // global simple-root index of alpha_1
    int root_offset = 0;    // global root index of first root
    int num_pos = 0;
    std::vector<std::vector<int>> pos_roots;  // sorted by (height, lex)
    std::vector<int> marks;                   // coords of the highest root
    int highest_root_index = 0;               // global index of theta
};
} // namespace detail

class RootSystem {
  public:
    explicit RootSystem(GroupSpec spec) : spec_(normalize_spec(std::move(spec))) { build(); }

    const GroupSpec& spec() const { return spec_; }
    int num_components() const { return static_cast<int>(comps_.size()); }
    SimpleType component_type(int c) const { return comps_[c].type; }
    int semisimple_rank() const { return ss_rank_; }
    int total_rank() const { return ss_rank_ + spec_.central_torus_rank; }
    int num_roots() const { return static_cast<int>(roots_.size()); }
    int num_positive() const { return num_roots() / 2; }
    long long dim_g() const { return num_roots() + total_rank(); }

    const Root& root(int idx) const { return roots_[idx]; }
    int root_index(const Root& r) const {
        auto it = index_.find(key(r));
        if (it == index_.end()) throw UsageError("not a root");
        return it->second;
    }
    bool is_root(const Root& r) const { return index_.count(key(r)) != 0; }
    int negate(int idx) const { return neg_[idx]; }
    bool is_positive(int idx) const {
        int local = idx - comps_[roots_[idx].component].root_offset;
        return local < comps_[roots_[idx].component].num_pos;
    }
    int height(int idx) const {
        const auto& c = roots_[idx].coords;
        return std::accumulate(c.begin(), c.end(), 0);
    }

    int simple_root_index(int comp, int i) const {  // i in 1..rank
        return root_index(Root{comp, unit(comps_[comp].type.rank, i - 1)});
    }
    int global_simple(int comp, int i) const { return comps_[comp].simple_offset + i - 1; }
    int num_simples() const { return ss_rank_; }
    int simple_root_of_global(int g) const { return simple_index_[g]; }
    std::pair<int, int> global_to_component(int g) const {  // (component, i in 1..rank)
        for (int c = 0; c < num_components(); ++c) {
            int r = comps_[c].type.rank;
            if (g < comps_[c].simple_offset + r) return {c, g - comps_[c].simple_offset + 1};
        }
        throw UsageError("simple index out of range");
    }

    int highest_root(int comp) const { return comps_[comp].highest_root_index; }
    int extended_node(int comp) const { return neg_[comps_[comp].highest_root_index]; }
    // marks (c_1..c_n); c_0 = 1 by convention for the extended node.
    const std::vector<int>& marks(int comp) const { return comps_[comp].marks; }

    // Symmetric bilinear form (integer-scaled).
    long long bilinear(int a, int b) const {
        const Root& x = roots_[a];
        const Root& y = roots_[b];
        if (x.component != y.component) return 0;
        const auto& cd = comps_[x.component].cd;
        long long s = 0;
        int n = comps_[x.component].type.rank;
        for (int i = 0; i < n; ++i) {
            if (x.coords[i] == 0) continue;
            for (int j = 0; j < n; ++j)
                s += static_cast<long long>(x.coords[i]) * y.coords[j] * cd.cartan[i][j] * cd.d[j];
        }
        return s;
    }
    long long norm2(int a) const { return bilinear(a, a); }
    // <beta, gamma^vee>, always an integer.
    int pairing(int beta, int gamma) const {
        long long num = 2 * bilinear(beta, gamma);
        long long den = norm2(gamma);
        return static_cast<int>(num / den);
    }

    // Permutation of all roots induced by the reflection s_beta.
    const std::vector<int>& reflection_perm(int beta) const { return refl_[beta]; }

    int reflect(int beta, int mirror) const { return refl_[mirror][beta]; }

    // [OP] reflect by a simple root (global simple index 0-based).
    int reflect_simple(int beta, int global_simple) const {
        if (global_simple < 0 || global_simple >= ss_rank_)
            throw UsageError("simple reflection index out of range");
        return refl_[simple_index_[global_simple]][beta];
    }

    const std::vector<std::vector<int>>& simple_reflection_perms() const { return simple_perms_; }

    // Weight-basis coordinates of a root (length = semisimple rank).
    std::vector<int> weight_coords(int idx) const {
        const Root& r = roots_[idx];
        const auto& comp = comps_[r.component];
        int n = comp.type.rank;
        std::vector<int> w(ss_rank_, 0);
        for (int j = 0; j < n; ++j) {
            int v = 0;
            for (int i = 0; i < n; ++i) v += r.coords[i] * comp.cd.cartan[i][j];
            w[comp.simple_offset + j] = v;
        }
        return w;
    }

    // Matrix of s_beta on weight coordinates (row-vector convention x -> x*M).
    std::vector<std::vector<long long>> reflection_weight_matrix(int beta) const {
        int n = ss_rank_;
        std::vector<std::vector<long long>> m(n, std::vector<long long>(n, 0));
        for (int i = 0; i < n; ++i) m[i][i] = 1;
        std::vector<int> bw = weight_coords(beta);
        // coroot coefficients: <omega_i, beta^vee> = 2*d_i*b_i / (beta,beta)
        const Root& r = roots_[beta];
        const auto& comp = comps_[r.component];
        long long nb = norm2(beta);
        for (int i = 0; i < comp.type.rank; ++i) {
            long long c = 2LL * comp.cd.d[i] * r.coords[i];
            if (c % nb != 0 && (c * 2) % nb != 0) throw std::logic_error("coroot not integral");
            long long cv = c / nb;  // exact for crystallographic systems
            if (cv * nb != c) throw std::logic_error("coroot not integral");
            int gi = comp.simple_offset + i;
            for (int k = 0; k < n; ++k) m[gi][k] -= cv * bw[k];
        }
        return m;
    }

    // --- subsystem operations -------------------------------------------

    // Closure of a root set under its own reflections.
    std::vector<int> reflection_closure(std::vector<int> set) const {
        std::sort(set.begin(), set.end());
        set.erase(std::unique(set.begin(), set.end()), set.end());
        std::unordered_set<int> in(set.begin(), set.end());
        std::deque<int> work(set.begin(), set.end());
        while (!work.empty()) {
            int b = work.front();
            work.pop_front();
            std::vector<int> cur(in.begin(), in.end());
            for (int g : cur) {
                int im = refl_[b][g];
                if (in.insert(im).second) work.push_back(im);
                int im2 = refl_[g][b];
                if (in.insert(im2).second) work.push_back(im2);
            }
        }
        std::vector<int> out(in.begin(), in.end());
        std::sort(out.begin(), out.end());
        return out;
    }

    // [OP] q_closure: span_Q(input) intersected with Phi.
    Subsystem q_closure(const std::vector<int>& roots) const {
        std::vector<std::vector<long long>> basis;  // row echelon, fraction-free
        auto reduce = [&](std::vector<long long> v) {
            for (const auto& b : basis) {
                int p = pivot(b);
                if (v[p] == 0) continue;
                long long a = b[p], c = v[p];
                long long g = std::gcd(a, c);
                long long fa = a / g, fc = c / g;
                for (std::size_t i = 0; i < v.size(); ++i) v[i] = v[i] * fa - b[i] * fc;
            }
            return v;
        };
        for (int r : roots) {
            auto v = reduce(to_full(r));
            if (!is_zero(v)) basis.push_back(normalize_row(v));
            sort_rows(basis);
        }
        std::vector<int> out;
        for (int i = 0; i < num_roots(); ++i)
            if (is_zero(reduce(to_full(i)))) out.push_back(i);
        return analyze_subsystem(out);
    }

    // [OP] subsystem_basis: indecomposable positive elements.
    std::vector<int> subsystem_basis(const std::vector<int>& closed) const {
        auto cl = closed;
        std::sort(cl.begin(), cl.end());
        if (reflection_closure(cl) != cl)
            throw UsageError("subsystem_basis: input set is not reflection-closed");
        std::vector<int> pos;
        for (int r : cl)
            if (is_positive(r)) pos.push_back(r);
        std::unordered_set<int> posset(pos.begin(), pos.end());
        std::vector<int> out;
        for (int r : pos) {
            bool simple = true;
            for (int a : pos) {
                if (a == r) continue;
                // r - a a root of the set and positive => r decomposable
                Root diff = roots_[r];
                const Root& ra = roots_[a];
                if (ra.component != diff.component) continue;
                for (std::size_t i = 0; i < diff.coords.size(); ++i) diff.coords[i] -= ra.coords[i];
                if (!is_root(diff)) continue;
                int d = root_index(diff);
                if (posset.count(d)) { simple = false; break; }
            }
            if (simple) out.push_back(r);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    // Recognize the Cartan type of a simple system and order each factor.
    std::vector<SubFactor> cartan_type_of(const std::vector<int>& basis) const {
        int k = static_cast<int>(basis.size());
        // validity: pairwise non-positive products, Gram positive definite in type sense
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (bilinear(basis[i], basis[j]) > 0)
                    throw UsageError("cartan_type_of: not a simple system (positive inner product)");
        // connected components of the Dynkin graph
        std::vector<int> comp(k, -1);
        int ncomp = 0;
        for (int i = 0; i < k; ++i) {
            if (comp[i] != -1) continue;
            std::deque<int> q{i};
            comp[i] = ncomp;
            while (!q.empty()) {
                int x = q.front();
                q.pop_front();
                for (int j = 0; j < k; ++j)
                    if (comp[j] == -1 && bilinear(basis[x], basis[j]) != 0) {
                        comp[j] = ncomp;
                        q.push_back(j);
                    }
            }
            ++ncomp;
        }
        std::vector<SubFactor> out;
        for (int c = 0; c < ncomp; ++c) {
            std::vector<int> nodes;
            for (int i = 0; i < k; ++i)
                if (comp[i] == c) nodes.push_back(basis[i]);
            out.push_back(classify_factor(nodes));
        }
        std::sort(out.begin(), out.end(), [](const SubFactor& a, const SubFactor& b) {
            return std::tie(a.type.letter, a.type.rank, a.tag, a.nodes) <
                   std::tie(b.type.letter, b.type.rank, b.tag, b.nodes);
        });
        return out;
    }

    Subsystem analyze_subsystem(std::vector<int> closed) const {
        std::sort(closed.begin(), closed.end());
        Subsystem s;
        s.roots = std::move(closed);
        s.basis = subsystem_basis(s.roots);
        s.factors = cartan_type_of(s.basis);
        s.rank = static_cast<int>(s.basis.size());
        return s;
    }

  private:
    static std::vector<int> unit(int n, int i) {
        std::vector<int> v(n, 0);
        v[i] = 1;
        return v;
    }
    static int pivot(const std::vector<long long>& v) {
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i] != 0) return static_cast<int>(i);
        return -1;
    }
    static bool is_zero(const std::vector<long long>& v) { return pivot(v) < 0; }
    static std::vector<long long> normalize_row(std::vector<long long> v) {
        long long g = 0;
        for (long long x : v) g = std::gcd(g, x < 0 ? -x : x);
        if (g > 1)
            for (auto& x : v) x /= g;
        int p = pivot(v);
        if (p >= 0 && v[p] < 0)
            for (auto& x : v) x = -x;
        return v;
    }
    static void sort_rows(std::vector<std::vector<long long>>& rows) {
        std::sort(rows.begin(), rows.end(),
                  [](const auto& a, const auto& b) { return pivot(a) < pivot(b); });
    }
    std::vector<long long> to_full(int idx) const {
        const Root& r = roots_[idx];
        std::vector<long long> v(ss_rank_, 0);
        int off = comps_[r.component].simple_offset;
        for (std::size_t i = 0; i < r.coords.size(); ++i) v[off + i] = r.coords[i];
        return v;
    }

    static std::string key_of(int comp, const std::vector<int>& coords) {
        std::string s;
        s.reserve(coords.size() + 1);
        s.push_back(static_cast<char>(comp));
        for (int c : coords) s.push_back(static_cast<char>(c + 64));
        return s;
    }
    static std::string key(const Root& r) { return key_of(r.component, r.coords); }

    SubFactor classify_factor(std::vector<int> nodes) const {
        SubFactor f;
        int m = static_cast<int>(nodes.size());
        long long maxn = 0, minn = std::numeric_limits<long long>::max();
        for (int r : nodes) {
            maxn = std::max(maxn, norm2(r));
            minn = std::min(minn, norm2(r));
        }
        // long/short tag relative to the ambient irreducible component
        int amb = roots_[nodes[0]].component;
        long long amb_max = ambient_max_norm_[amb];
        long long amb_min = ambient_min_norm_[amb];
        if (amb_max != amb_min && maxn == minn)
            f.tag = (maxn == amb_max) ? LengthTag::long_ : LengthTag::short_;

        auto bond = [&](int a, int b) {
            long long num = 4 * bilinear(a, b) * bilinear(a, b);
            long long den = norm2(a) * norm2(b);
            return static_cast<int>(num / den);
        };
        std::vector<std::vector<int>> adj(m);
        int max_bond = 0;
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                if (i != j && bilinear(nodes[i], nodes[j]) != 0) {
                    adj[i].push_back(j);
                    max_bond = std::max(max_bond, bond(nodes[i], nodes[j]));
                }
        auto order_chain = [&](int start) {
            std::vector<int> order{start};
            std::vector<char> used(m, 0);
            used[start] = 1;
            while (static_cast<int>(order.size()) < m) {
                int cur = order.back();
                bool adv = false;
                for (int nb : adj[cur])
                    if (!used[nb]) {
                        order.push_back(nb);
                        used[nb] = 1;
                        adv = true;
                        break;
                    }
                if (!adv) throw UsageError("cartan_type_of: invalid diagram");
            }
            return order;
        };
        auto finish = [&](Letter l, const std::vector<int>& order) {
            f.type = {l, m};
            for (int i : order) f.nodes.push_back(nodes[i]);
            return f;
        };

        if (m == 1) return finish(Letter::A, {0});
        if (max_bond == 3) {
            if (m != 2) throw UsageError("cartan_type_of: invalid triple bond");
            int s = norm2(nodes[0]) < norm2(nodes[1]) ? 0 : 1;  // G2: short first
            return finish(Letter::G, {s, 1 - s});
        }
        if (max_bond == 2) {
            // chain types B / C / F4
            std::vector<int> ends;
            for (int i = 0; i < m; ++i)
                if (adj[i].size() == 1) ends.push_back(i);
            if (ends.size() != 2) throw UsageError("cartan_type_of: invalid multi-bond diagram");
            int nlong = 0;
            for (int r : nodes)
                if (norm2(r) == maxn) ++nlong;
            if (nlong == m / 2 && m == 4) {
                // F4: start at the long end
                int start = norm2(nodes[ends[0]]) == maxn ? ends[0] : ends[1];
                auto order = order_chain(start);
                // confirm the double bond sits in the middle
                if (bond(nodes[order[1]], nodes[order[2]]) != 2)
                    throw UsageError("cartan_type_of: invalid rank-4 diagram");
                return finish(Letter::F, order);
            }
            if (m == 2) {
                // B2 = C2; canonical presentation C2 (short, long)
                int s = norm2(nodes[0]) < norm2(nodes[1]) ? 0 : 1;
                return finish(Letter::C, {s, 1 - s});
            }
            if (nlong == m - 1) {
                // B_m: unique short node must be an end; chain ends there
                int se = norm2(nodes[ends[0]]) == minn ? ends[0] : ends[1];
                if (norm2(nodes[se]) != minn) throw UsageError("cartan_type_of: bad B diagram");
                return finish(Letter::B, order_chain(se == ends[0] ? ends[1] : ends[0]));
            }
            if (nlong == 1) {
                int le = norm2(nodes[ends[0]]) == maxn ? ends[0] : ends[1];
                if (norm2(nodes[le]) != maxn) throw UsageError("cartan_type_of: bad C diagram");
                return finish(Letter::C, order_chain(le == ends[0] ? ends[1] : ends[0]));
            }
            throw UsageError("cartan_type_of: unrecognized multi-bond diagram");
        }
        // simply laced: A, D or E
        int branch = -1;
        for (int i = 0; i < m; ++i) {
            if (adj[i].size() > 3) throw UsageError("cartan_type_of: node of degree > 3");
            if (adj[i].size() == 3) {
                if (branch != -1) throw UsageError("cartan_type_of: two branch nodes");
                branch = i;
            }
        }
        if (branch == -1) {
            std::vector<int> ends;
            for (int i = 0; i < m; ++i)
                if (adj[i].size() <= 1) ends.push_back(i);
            int start = (m == 1) ? 0 : (nodes[ends[0]] < nodes[ends[1]] ? ends[0] : ends[1]);
            return finish(Letter::A, order_chain(start));
        }
        // legs from the branch node
        std::vector<std::vector<int>> legs;
        for (int nb : adj[branch]) {
            std::vector<int> leg{nb};
            int prev = branch, cur = nb;
            while (true) {
                int nxt = -1;
                for (int x : adj[cur])
                    if (x != prev) nxt = x;
                if (nxt < 0) break;
                leg.push_back(nxt);
                prev = cur;
                cur = nxt;
            }
            legs.push_back(std::move(leg));
        }
        std::sort(legs.begin(), legs.end(), [&](const auto& a, const auto& b) {
            if (a.size() != b.size()) return a.size() < b.size();
            return nodes[a[0]] < nodes[b[0]];
        });
        std::size_t l0 = legs[0].size(), l1 = legs[1].size(), l2 = legs[2].size();
        if (l0 == 1 && l1 == 1) {
            // D_m: long leg reversed, then branch, then the two fork nodes
            std::vector<int> order(legs[2].rbegin(), legs[2].rend());
            order.push_back(branch);
            order.push_back(legs[0][0]);
            order.push_back(legs[1][0]);
            return finish(Letter::D, order);
        }
        if (l0 == 1 && l1 == 2 && (l2 >= 2 && l2 <= 4)) {
            // E6/E7/E8 Bourbaki: 1,3 from the 2-leg; 2 = short leg; 4 = branch; rest long leg
            std::vector<int> order;
            order.push_back(legs[1][1]);
            order.push_back(legs[0][0]);
            order.push_back(legs[1][0]);
            order.push_back(branch);
            for (int x : legs[2]) order.push_back(x);
            return finish(Letter::E, order);
        }
        throw UsageError("cartan_type_of: unrecognized branched diagram");
    }

    void build() {
        int simple_off = 0, root_off = 0;
        for (auto t : spec_.factors) {
            detail::ComponentData c;
            c.type = t;
            c.cd = cartan_data(t);
            c.simple_offset = simple_off;
            c.root_offset = root_off;
            // orbit of simple roots under simple reflections
            std::set<std::vector<int>> all;
            std::deque<std::vector<int>> work;
            int n = t.rank;
            for (int i = 0; i < n; ++i) {
                auto v = unit(n, i);
                all.insert(v);
                work.push_back(v);
            }
            while (!work.empty()) {
                auto v = work.front();
                work.pop_front();
                for (int j = 0; j < n; ++j) {
                    int p = 0;
                    for (int k = 0; k < n; ++k) p += v[k] * c.cd.cartan[k][j];
                    auto w = v;
                    w[j] -= p;
                    if (all.insert(w).second) work.push_back(w);
                }
            }
            for (auto& v : all) {
                int h = std::accumulate(v.begin(), v.end(), 0);
                if (h > 0) c.pos_roots.push_back(v);
            }
            std::sort(c.pos_roots.begin(), c.pos_roots.end(), [](const auto& a, const auto& b) {
                int ha = std::accumulate(a.begin(), a.end(), 0);
                int hb = std::accumulate(b.begin(), b.end(), 0);
                return std::tie(ha, a) < std::tie(hb, b);
            });
            c.num_pos = static_cast<int>(c.pos_roots.size());
            c.marks = c.pos_roots.back();
            comps_.push_back(std::move(c));
            simple_off += n;
            root_off += 2 * comps_.back().num_pos;
        }
        ss_rank_ = simple_off;

        for (int ci = 0; ci < num_components(); ++ci) {
            auto& c = comps_[ci];
            for (const auto& v : c.pos_roots) roots_.push_back(Root{ci, v});
            for (const auto& v : c.pos_roots) {
                auto neg = v;
                for (auto& x : neg) x = -x;
                roots_.push_back(Root{ci, neg});
            }
            c.highest_root_index = c.root_offset + c.num_pos - 1;
        }
        for (int i = 0; i < num_roots(); ++i) index_[key(roots_[i])] = i;
        neg_.resize(num_roots());
        for (int i = 0; i < num_roots(); ++i) {
            auto neg = roots_[i];
            for (auto& x : neg.coords) x = -x;
            neg_[i] = index_.at(key(neg));
        }
        ambient_max_norm_.assign(num_components(), 0);
        ambient_min_norm_.assign(num_components(), std::numeric_limits<long long>::max());

        // reflection permutation tables
        refl_.assign(num_roots(), std::vector<int>(num_roots()));
        for (int b = 0; b < num_roots(); ++b) {
            long long nb = norm2(b);
            int cb = roots_[b].component;
            ambient_max_norm_[cb] = std::max(ambient_max_norm_[cb], nb);
            ambient_min_norm_[cb] = std::min(ambient_min_norm_[cb], nb);
            for (int g = 0; g < num_roots(); ++g) {
                if (roots_[g].component != cb) {
                    refl_[b][g] = g;
                    continue;
                }
                long long num = 2 * bilinear(g, b);
                int coef = static_cast<int>(num / nb);
                Root im = roots_[g];
                const Root& rb = roots_[b];
                for (std::size_t i = 0; i < im.coords.size(); ++i) im.coords[i] -= coef * rb.coords[i];
                refl_[b][g] = index_.at(key(im));
            }
        }
        simple_index_.clear();
        for (int ci = 0; ci < num_components(); ++ci)
            for (int i = 1; i <= comps_[ci].type.rank; ++i)
                simple_index_.push_back(simple_root_index(ci, i));
        simple_perms_.clear();
        for (int s : simple_index_) simple_perms_.push_back(refl_[s]);

        // sanity: 2|Phi+| + rank = dim of semisimple part
        if (2 * num_positive() != num_roots()) throw std::logic_error("root count mismatch");
    }

    GroupSpec spec_;
    std::vector<detail::ComponentData> comps_;
    std::vector<Root> roots_;
    std::unordered_map<std::string, int> index_;
    std::vector<int> neg_;
    std::vector<std::vector<int>> refl_;
    std::vector<int> simple_index_;  // global simple idx -> root idx
    std::vector<std::vector<int>> simple_perms_;
    std::vector<long long> ambient_max_norm_, ambient_min_norm_;
    int ss_rank_ = 0;
};

// [OP] build_root_system
inline RootSystem build_root_system(const GroupSpec& spec) { return RootSystem(spec); }

// --- Weyl orbit canonicalization -----------------------------------------

struct OrbitCanon {
    std::vector<int> canonical;                  // lex-least subsystem in the orbit
    std::vector<int> word;                       // generator indices, input -> canonical
    std::vector<std::vector<int>> stab_words;    // setwise stabilizer of canonical
    std::vector<std::vector<int>> stab_perms;    // action on canonical positions
    std::size_t orbit_size = 0;
};

constexpr std::size_t kDefaultOrbitBudget = 20'000'000;

// Full orbit BFS of a root set under the given involutive permutations.
// Canonical form is the lexicographically least element visited; Schreier
// generators of the setwise stabilizer are deduplicated by their action on
// the canonical set.
inline OrbitCanon canonicalize_subsystem(const std::vector<std::vector<int>>& gens,
                                         std::vector<int> input,
                                         std::size_t budget = kDefaultOrbitBudget) {
    std::sort(input.begin(), input.end());
    const int k = static_cast<int>(input.size());

    struct Node {
        std::vector<int> ordered;  // images of the input roots, input order
        int parent = -1;
        int gen = -1;
    };
    std::vector<Node> nodes;
    std::unordered_map<std::vector<int>, int, IntVecHash> seen;
    auto sorted_of = [&](const std::vector<int>& ord) {
        auto s = ord;
        std::sort(s.begin(), s.end());
        return s;
    };
    nodes.push_back({input, -1, -1});
    seen.emplace(input, 0);
    int best = 0;

    struct Edge { int node, gen, target; };
    std::vector<Edge> extra;  // non-tree edges (Schreier witnesses)

    for (std::size_t i = 0; i < nodes.size(); ++i) {
        for (std::size_t g = 0; g < gens.size(); ++g) {
            std::vector<int> ord(k);
            for (int j = 0; j < k; ++j) ord[j] = gens[g][nodes[i].ordered[j]];
            auto s = sorted_of(ord);
            auto it = seen.find(s);
            if (it == seen.end()) {
                if (nodes.size() >= budget)
                    throw ResourceError("orbit canonicalization exceeded the configured budget of " +
                                        std::to_string(budget) + " stored subsystem images");
                nodes.push_back({std::move(ord), static_cast<int>(i), static_cast<int>(g)});
                int id = static_cast<int>(nodes.size()) - 1;
                seen.emplace(std::move(s), id);
                if (sorted_of(nodes[id].ordered) < sorted_of(nodes[best].ordered)) best = id;
            } else {
                extra.push_back({static_cast<int>(i), static_cast<int>(g), it->second});
            }
        }
    }

    auto word_of = [&](int id) {
        std::vector<int> w;
        while (nodes[id].parent >= 0) {
            w.push_back(nodes[id].gen);
            id = nodes[id].parent;
        }
        std::reverse(w.begin(), w.end());
        return w;
    };

    OrbitCanon out;
    out.orbit_size = nodes.size();
    out.canonical = sorted_of(nodes[best].ordered);
    out.word = word_of(best);

    // position of each canonical root within nodes[best].ordered
    const auto& cord = nodes[best].ordered;
    std::unordered_map<int, int> cord_inv;  // root -> input position
    for (int j = 0; j < k; ++j) cord_inv[cord[j]] = j;
    std::vector<int> canon_pos_of_input(k);  // input index -> canonical position
    {
        std::unordered_map<int, int> canon_rank;
        for (int j = 0; j < k; ++j) canon_rank[out.canonical[j]] = j;
        for (int j = 0; j < k; ++j) canon_pos_of_input[j] = canon_rank[cord[j]];
    }

    std::unordered_set<std::vector<int>, IntVecHash> perm_seen;
    {
        std::vector<int> ident(k);
        std::iota(ident.begin(), ident.end(), 0);
        perm_seen.insert(ident);
    }
    auto wb = out.word;
    std::vector<int> wb_rev(wb.rbegin(), wb.rend());
    for (const auto& e : extra) {
        // Schreier generator t_x g t_y^{-1} stabilizes the input set.
        // Its action on input positions:
        const auto& ox = nodes[e.node].ordered;
        const auto& oy = nodes[e.target].ordered;
        std::unordered_map<int, int> oy_inv;
        for (int j = 0; j < k; ++j) oy_inv[oy[j]] = j;
        std::vector<int> p(k);  // input position j -> input position p[j]
        bool ok = true;
        for (int j = 0; j < k; ++j) {
            auto it = oy_inv.find(gens[e.gen][ox[j]]);
            if (it == oy_inv.end()) { ok = false; break; }
            p[j] = it->second;
        }
        if (!ok) continue;  // target set differs (hash collision guard)
        // conjugate to an action on canonical positions
        std::vector<int> cp(k);
        for (int j = 0; j < k; ++j) cp[canon_pos_of_input[j]] = canon_pos_of_input[p[j]];
        if (!perm_seen.insert(cp).second) continue;
        std::vector<int> w;
        w.insert(w.end(), wb_rev.begin(), wb_rev.end());
        auto wx = word_of(e.node);
        w.insert(w.end(), wx.begin(), wx.end());
        w.push_back(e.gen);
        auto wy = word_of(e.target);
        w.insert(w.end(), wy.rbegin(), wy.rend());
        w.insert(w.end(), wb.begin(), wb.end());
        out.stab_words.push_back(std::move(w));
        out.stab_perms.push_back(std::move(cp));
    }
    return out;
}

// [OP] weyl_canonical: canonical form under the full Weyl group of rs.
inline OrbitCanon weyl_canonical(const RootSystem& rs, const std::vector<int>& roots,
                                 std::size_t budget = kDefaultOrbitBudget) {
    return canonicalize_subsystem(rs.simple_reflection_perms(), roots, budget);
}

inline std::string subsystem_type_string(const std::vector<SubFactor>& factors) {
    if (factors.empty()) return "T";
    std::string s;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) s += "+";
        s += factor_string(factors[i]);
    }
    return s;
}

} // namespace lie
