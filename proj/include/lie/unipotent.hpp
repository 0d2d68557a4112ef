#pragma once

// Unipotent classes of simple groups. Classical types are parametrized by
// partitions with the usual parity conditions; dimensions come from the
// centralizer formulas in gl/so/sp. Induction from Levi subgroups is
// computed by the doubled-block sum followed by a parity collapse, and
// rigidity by exhausting all proper Levi inductions. Exceptional types are
// served from a bundled data table.

#include "lie/common.hpp"
#include "lie/rootsys.hpp"

#include <filesystem>
#include <fstream>
#include <map>

namespace lie {

using Partition = std::vector<int>;  // weakly decreasing, positive parts

struct UnipotentClass {
    Partition partition;   // classical types
    int decoration = 0;    // 1 / 2 for the two very even classes in type D
    std::string label;     // exceptional types
    long long dim = 0;
    bool rigid = false;

    friend bool operator==(const UnipotentClass& a, const UnipotentClass& b) {
        return std::tie(a.label, a.partition, a.decoration) ==
               std::tie(b.label, b.partition, b.decoration);
    }
    friend bool operator<(const UnipotentClass& a, const UnipotentClass& b) {
        return std::tie(a.label, a.partition, a.decoration) <
               std::tie(b.label, b.partition, b.decoration);
    }
};

inline std::string class_string(const UnipotentClass& u) {
    if (!u.label.empty()) return u.label;
    std::string s = "[";
    for (std::size_t i = 0; i < u.partition.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(u.partition[i]);
    }
    s += "]";
    if (u.decoration) s += (u.decoration == 1 ? "'" : "''");
    return s;
}

// --- partition utilities ---------------------------------------------------

inline std::vector<Partition> all_partitions(int n) {
    std::vector<Partition> out;
    Partition cur;
    auto rec = [&](auto&& self, int rest, int maxpart) -> void {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

inline Partition conjugate_partition(const Partition& p) {
    if (p.empty()) return {};
    Partition out(p[0], 0);
    for (int part : p)
        for (int i = 0; i < part; ++i) ++out[i];
    return out;
}

inline int partition_sum(const Partition& p) {
    int s = 0;
    for (int x : p) s += x;
    return s;
}

// parity condition: B/D need even parts with even multiplicity, C odd parts
inline bool partition_valid(Letter l, const Partition& p) {
    if (l == Letter::A) return true;
    int bad_parity = (l == Letter::C) ? 1 : 0;
    std::map<int, int> mult;
    for (int x : p) ++mult[x];
    for (auto [v, m] : mult)
        if (v % 2 == bad_parity && m % 2 != 0) return false;
    return true;
}

// largest partition in dominance order below p satisfying the parity rule
inline Partition parity_collapse(Letter l, Partition p) {
    std::sort(p.rbegin(), p.rend());
    int bad_parity = (l == Letter::C) ? 1 : 0;
    while (!partition_valid(l, p)) {
        // largest offending value, last copy of it
        int v = 0;
        std::map<int, int> mult;
        for (int x : p) ++mult[x];
        for (auto [val, m] : mult)
            if (val % 2 == bad_parity && m % 2 != 0) v = std::max(v, val);
        int i = -1;
        for (std::size_t k = 0; k < p.size(); ++k)
            if (p[k] == v) i = static_cast<int>(k);
        --p[i];
        // move the box as high as possible strictly below position i
        bool placed = false;
        for (std::size_t j = i + 1; j < p.size(); ++j) {
            int above = p[j - 1];
            if (p[j] + 1 <= above) {
                ++p[j];
                placed = true;
                break;
            }
        }
        if (!placed) p.push_back(1);
        while (!p.empty() && p.back() == 0) p.pop_back();
        std::sort(p.rbegin(), p.rend());
    }
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

// orbit dimension in the classical group of canonical type t
inline long long orbit_dimension(SimpleType t, const Partition& p) {
    auto m = conjugate_partition(p);
    long long sq = 0;
    for (int x : m) sq += static_cast<long long>(x) * x;
    long long odd = 0;
    for (int x : p)
        if (x % 2 == 1) ++odd;
    long long n = partition_sum(p);
    switch (t.letter) {
        case Letter::A: return n * n - sq;                            // gl_n
        case Letter::B:
        case Letter::D: return n * (n - 1) / 2 - (sq - odd) / 2;      // so_n
        case Letter::C: return n * (n + 1) / 2 - (sq + odd) / 2;      // sp_n
        default: throw CapabilityError("orbit_dimension: exceptional type " + type_string(t));
    }
}

inline int classical_partition_size(SimpleType t) {
    switch (t.letter) {
        case Letter::A: return t.rank + 1;
        case Letter::B: return 2 * t.rank + 1;
        case Letter::C: return 2 * t.rank;
        case Letter::D: return 2 * t.rank;
        default: throw CapabilityError("no partition model for " + type_string(t));
    }
}

// translate a class between groups with isomorphic root systems
// (A1 <-> B1/C1, C2 <-> B2, A3 <-> D3) by matching orbit dimensions
inline UnipotentClass convert_class(SimpleType from, const UnipotentClass& u, SimpleType to) {
    if (from == to) return u;
    for (const auto& q : all_partitions(classical_partition_size(to))) {
        if (!partition_valid(to.letter, q)) continue;
        if (orbit_dimension(to, q) == u.dim) {
            UnipotentClass out;
            out.partition = q;
            out.dim = u.dim;
            out.rigid = u.rigid;
            out.decoration = u.decoration;
            return out;
        }
    }
    throw std::logic_error("convert_class: no dimension match");
}

// --- exceptional orbit tables ----------------------------------------------

class UnipotentCatalog {
  public:
    explicit UnipotentCatalog(std::optional<std::string> data_dir = std::nullopt) {
        if (data_dir) load_exceptional(*data_dir);
    }

    bool has_exceptional() const { return has_exceptional_; }

    const std::vector<UnipotentClass>& classes(SimpleType t) const {
        auto it = cache_.find(t);
        if (it != cache_.end()) return it->second;
        if (t.letter == Letter::E || t.letter == Letter::F || t.letter == Letter::G) {
            auto et = exceptional_.find(type_string(t));
            if (et == exceptional_.end())
                throw CapabilityError("no orbit table for " + type_string(t) +
                                      " (exceptional data not loaded)");
            return cache_.emplace(t, et->second).first->second;
        }
        return cache_.emplace(t, build_classical(t)).first->second;
    }

    // all classes arising by induction from a proper Levi of the simple
    // group of canonical type t (bare partitions; decorations excluded)
    const std::set<Partition>& induced_partitions(SimpleType t) const;

  private:
    std::vector<UnipotentClass> build_classical(SimpleType t) const;

    void load_exceptional(const std::string& dir) {
        namespace fs = std::filesystem;
        fs::path p = fs::path(dir) / "exceptional" / "orbits.tsv";
        std::ifstream in(p);
        if (!in) return;  // absent data dir: exceptional support disabled
        std::string line;
        bool header_seen = false;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#') continue;
            if (!header_seen) {  // column header
                header_seen = true;
                continue;
            }
            std::istringstream ss(line);
            std::string type, label, dim, rigid;
            if (!std::getline(ss, type, '\t') || !std::getline(ss, label, '\t') ||
                !std::getline(ss, dim, '\t') || !std::getline(ss, rigid, '\t'))
                throw UsageError("malformed orbit table row: " + line);
            UnipotentClass u;
            u.label = label;
            u.dim = std::stoll(dim);
            if (rigid != "0" && rigid != "1")
                throw UsageError("orbit table rigid flag must be 0 or 1: " + line);
            u.rigid = rigid == "1";
            exceptional_[type].push_back(u);
        }
        validate_exceptional();
        has_exceptional_ = !exceptional_.empty();
    }

    void validate_exceptional() const {
        static const std::map<std::string, std::pair<long long, int>> bounds = {
            {"G2", {14, 2}}, {"F4", {52, 4}}, {"E6", {78, 6}}, {"E7", {133, 7}}, {"E8", {248, 8}}};
        for (const auto& [type, list] : exceptional_) {
            auto bit = bounds.find(type);
            if (bit == bounds.end()) throw UsageError("orbit table: unknown type " + type);
            long long reg = bit->second.first - bit->second.second;
            bool have_triv = false, have_reg = false;
            std::set<std::string> labels;
            for (const auto& u : list) {
                if (!labels.insert(u.label).second)
                    throw UsageError("orbit table: duplicate label " + u.label + " in " + type);
                if (u.dim < 0 || u.dim > reg || u.dim % 2 != 0)
                    throw UsageError("orbit table: bad dimension for " + type + " " + u.label);
                if (u.dim == 0) {
                    have_triv = true;
                    if (!u.rigid) throw UsageError("orbit table: trivial class must be rigid");
                }
                if (u.dim == reg) {
                    have_reg = true;
                    if (u.rigid) throw UsageError("orbit table: regular class cannot be rigid");
                }
            }
            if (!have_triv || !have_reg)
                throw UsageError("orbit table for " + type + " misses the trivial or regular class");
        }
    }

    mutable std::map<SimpleType, std::vector<UnipotentClass>> cache_;
    mutable std::map<SimpleType, std::set<Partition>> induced_cache_;
    std::map<std::string, std::vector<UnipotentClass>> exceptional_;
    bool has_exceptional_ = false;
};

// --- induction from Levi subgroups ------------------------------------------

// Levi data inside one simple factor of canonical type t: the chosen node
// positions (1-based, Bourbaki order of t) grouped into connected diagram
// components, each with the class of the corresponding Levi factor (in the
// canonical type of that component).
struct FactorLeviPart {
    std::vector<int> nodes;  // sorted positions
    UnipotentClass cls;
};

namespace detail {

inline bool adjacent_nodes(SimpleType t, int a, int b) {
    int n = t.rank;
    if (t.letter == Letter::D) {
        if ((a == n - 1 && b == n) || (a == n && b == n - 1)) return false;
        if (a > b) std::swap(a, b);
        if (b == n) return a == n - 2;
        return b == a + 1;
    }
    if (t.letter == Letter::E) {
        if (a > b) std::swap(a, b);
        if (a == 1) return b == 3;
        if (a == 2) return b == 4;
        return b == a + 1 && a >= 3;
    }
    if (a > b) std::swap(a, b);
    return b == a + 1;
}

inline Partition doubled(const Partition& p) {
    Partition out = p;
    for (auto& x : out) x *= 2;
    return out;
}

inline Partition coordinatewise_sum(const Partition& a, const Partition& b) {
    Partition out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return out;
}

} // namespace detail

// induced class within a simple factor of canonical classical type t
inline UnipotentClass induce_in_factor(SimpleType t, std::vector<FactorLeviPart> parts) {
    if (t.letter != Letter::A && t.letter != Letter::B && t.letter != Letter::C &&
        t.letter != Letter::D)
        throw CapabilityError("induction is not implemented for ambient type " + type_string(t));
    const int n = t.rank;
    // verify components are connected and disjoint
    std::set<int> used;
    for (const auto& pt : parts)
        for (int x : pt.nodes) {
            if (x < 1 || x > n) throw UsageError("induce_in_factor: node out of range");
            if (!used.insert(x).second) throw UsageError("induce_in_factor: repeated node");
        }
    long long src_dim = 0, src_pos = 0;
    for (const auto& pt : parts) src_dim += pt.cls.dim;

    if (t.letter == Letter::A) {
        // GL induction: plain coordinatewise sum of all block partitions
        Partition s;
        for (const auto& pt : parts) {
            src_pos += static_cast<long long>(pt.nodes.size()) * (pt.nodes.size() + 1) / 2;
            s = detail::coordinatewise_sum(s, pt.cls.partition);
        }
        int leftover = (n + 1) - partition_sum(s);
        for (int i = 0; i < leftover; ++i) s = detail::coordinatewise_sum(s, {1});
        std::sort(s.rbegin(), s.rend());
        UnipotentClass out;
        out.partition = s;
        out.dim = orbit_dimension(t, s);
        long long npos_g = static_cast<long long>(n) * (n + 1) / 2;
        if (out.dim != src_dim + 2 * (npos_g - src_pos))
            throw std::logic_error("induce_in_factor: dimension identity failed (A)");
        return out;
    }

    Partition core;                 // native core partition
    int core_bit = -1;              // very even bit carried by the core
    std::vector<Partition> blocks;  // GL block partitions
    int fork_bit = -1;              // very even bit carried by a fork GL2 block
    int consumed = 0;               // rank used: len+1 per GL_{len+1}, len per core
    long long src_pos_count = 0;

    const FactorLeviPart* fork1 = nullptr;  // D: singleton {n-1}
    const FactorLeviPart* fork2 = nullptr;  // D: singleton {n}
    auto npos_of = [&](SimpleType ct) -> long long {
        switch (ct.letter) {
            case Letter::A: return static_cast<long long>(ct.rank) * (ct.rank + 1) / 2;
            case Letter::B:
            case Letter::C: return static_cast<long long>(ct.rank) * ct.rank;
            case Letter::D: return static_cast<long long>(ct.rank) * (ct.rank - 1);
            default: throw CapabilityError("npos_of: exceptional");
        }
    };

    for (const auto& pt : parts) {
        // connectivity check
        for (std::size_t i = 0; i + 1 < pt.nodes.size(); ++i) {
            bool conn = false;
            for (std::size_t j = 0; j <= i; ++j)
                for (std::size_t k = i + 1; k < pt.nodes.size(); ++k)
                    if (detail::adjacent_nodes(t, pt.nodes[j], pt.nodes[k])) conn = true;
            if (!conn) throw UsageError("induce_in_factor: component not connected");
        }
        int len = static_cast<int>(pt.nodes.size());
        bool has_last = std::count(pt.nodes.begin(), pt.nodes.end(), n) > 0;
        bool has_prev = std::count(pt.nodes.begin(), pt.nodes.end(), n - 1) > 0;
        if (t.letter == Letter::B || t.letter == Letter::C) {
            if (has_last) {
                // same-letter core of rank len
                SimpleType native{t.letter, len};
                SimpleType canon = native;
                if (len == 1) canon = {Letter::A, 1};
                if (len == 2) canon = {Letter::C, 2};
                core = convert_class(canon, pt.cls, native).partition;
                src_pos_count += npos_of(native);
                consumed += len;
                continue;
            }
        } else {  // D
            if (has_last && has_prev) {
                SimpleType native{Letter::D, len};
                SimpleType canon = native;
                if (len == 3) canon = {Letter::A, 3};
                auto conv = convert_class(canon, pt.cls, native);
                core = conv.partition;
                if (conv.decoration) core_bit = conv.decoration - 1;
                src_pos_count += npos_of(native);
                consumed += len;
                continue;
            }
            if (len == 1 && pt.nodes[0] == n - 1) { fork1 = &pt; continue; }
            if (len == 1 && pt.nodes[0] == n) { fork2 = &pt; continue; }
            if (has_last || has_prev) {
                // GL block running into one fork: remembers which family
                blocks.push_back(pt.cls.partition);
                if (len == 1) throw std::logic_error("unreachable fork singleton");
                fork_bit = has_prev ? 0 : 1;
                src_pos_count += npos_of({Letter::A, len});
                consumed += len + 1;
                continue;
            }
        }
        blocks.push_back(pt.cls.partition);
        src_pos_count += npos_of({Letter::A, len});
        consumed += len + 1;
    }

    if (fork1 && fork2) {
        // two commuting SL2's through both fork nodes: an SO4 core
        bool r1 = fork1->cls.partition == Partition{2};
        bool r2 = fork2->cls.partition == Partition{2};
        if (r1 && r2) core = {3, 1};
        else if (r1 || r2) { core = {2, 2}; core_bit = r1 ? 0 : 1; }
        else core = {1, 1, 1, 1};
        consumed += 2;
        src_pos_count += 2;
    } else if (fork1 || fork2) {
        const auto* f = fork1 ? fork1 : fork2;
        blocks.push_back(f->cls.partition);
        fork_bit = fork1 ? 0 : 1;
        consumed += 2;
        src_pos_count += 1;
    }

    int leftover = n - consumed;
    for (int i = 0; i < leftover; ++i) blocks.push_back({1});

    int target = classical_partition_size(t);
    if (core.empty() && t.letter == Letter::B) core = {1};
    Partition s = core;
    for (const auto& b : blocks) s = detail::coordinatewise_sum(s, detail::doubled(b));
    if (partition_sum(s) != target) throw std::logic_error("induce_in_factor: size mismatch");
    auto res = parity_collapse(t.letter, s);

    UnipotentClass out;
    out.partition = res;
    out.dim = orbit_dimension(t, res);
    if (out.dim != src_dim + 2 * (npos_of(t) - src_pos_count))
        throw std::logic_error("induce_in_factor: dimension identity failed");
    if (t.letter == Letter::D) {
        bool very_even = true;
        for (int x : res)
            if (x % 2) very_even = false;
        if (very_even) {
            int bit = 0;
            bool have = false;
            if (core_bit >= 0) { bit ^= core_bit; have = true; }
            if (fork_bit >= 0) { bit ^= fork_bit; have = true; }
            if (!have)
                throw std::logic_error("very even induced class without a decoration source");
            out.decoration = bit + 1;
        }
    }
    return out;
}

// --- class lists and rigidity ------------------------------------------------

inline std::vector<UnipotentClass> UnipotentCatalog::build_classical(SimpleType t) const {
    std::vector<UnipotentClass> out;
    int size = classical_partition_size(t);
    const auto& induced = induced_partitions(t);
    for (const auto& p : all_partitions(size)) {
        if (!partition_valid(t.letter, p)) continue;
        UnipotentClass u;
        u.partition = p;
        u.dim = orbit_dimension(t, p);
        u.rigid = induced.find(p) == induced.end();
        bool very_even = t.letter == Letter::D;
        if (very_even)
            for (int x : p)
                if (x % 2) very_even = false;
        if (very_even) {
            u.decoration = 1;
            out.push_back(u);
            u.decoration = 2;
            out.push_back(u);
        } else {
            out.push_back(u);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline const std::set<Partition>& UnipotentCatalog::induced_partitions(SimpleType t) const {
    auto it = induced_cache_.find(t);
    if (it != induced_cache_.end()) return it->second;
    std::set<Partition> result;
    int n = t.rank;
    for (std::size_t mask = 0; mask + 1 < (std::size_t(1) << n); ++mask) {
        // group chosen nodes into diagram components
        std::vector<int> chosen;
        for (int i = 0; i < n; ++i)
            if (mask & (std::size_t(1) << i)) chosen.push_back(i + 1);
        std::vector<std::vector<int>> comps;
        std::vector<char> seen(chosen.size(), 0);
        for (std::size_t i = 0; i < chosen.size(); ++i) {
            if (seen[i]) continue;
            std::vector<int> comp{chosen[i]};
            seen[i] = 1;
            bool grew = true;
            while (grew) {
                grew = false;
                for (std::size_t j = 0; j < chosen.size(); ++j) {
                    if (seen[j]) continue;
                    for (int x : comp)
                        if (detail::adjacent_nodes(t, x, chosen[j])) {
                            comp.push_back(chosen[j]);
                            seen[j] = 1;
                            grew = true;
                            break;
                        }
                }
            }
            std::sort(comp.begin(), comp.end());
            comps.push_back(std::move(comp));
        }
        // canonical type of each component
        std::vector<SimpleType> ctypes;
        for (const auto& c : comps) {
            int len = static_cast<int>(c.size());
            bool has_n = std::count(c.begin(), c.end(), n) > 0;
            bool has_n1 = std::count(c.begin(), c.end(), n - 1) > 0;
            SimpleType ct{Letter::A, len};
            if ((t.letter == Letter::B || t.letter == Letter::C) && has_n && len >= 2)
                ct = (len == 2) ? SimpleType{Letter::C, 2} : SimpleType{t.letter, len};
            if (t.letter == Letter::D && has_n && has_n1 && len >= 3)
                ct = (len == 3) ? SimpleType{Letter::A, 3} : SimpleType{Letter::D, len};
            ctypes.push_back(ct);
        }
        // all combinations of factor classes
        std::vector<std::vector<FactorLeviPart>> combos{{}};
        for (std::size_t ci = 0; ci < comps.size(); ++ci) {
            std::vector<std::vector<FactorLeviPart>> next;
            for (const auto& u : classes(ctypes[ci]))
                for (const auto& base : combos) {
                    auto v = base;
                    v.push_back({comps[ci], u});
                    next.push_back(std::move(v));
                }
            combos = std::move(next);
        }
        for (const auto& combo : combos) result.insert(induce_in_factor(t, combo).partition);
    }
    return induced_cache_.emplace(t, std::move(result)).first->second;
}

} // namespace lie
