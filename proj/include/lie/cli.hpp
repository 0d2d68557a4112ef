#pragma once

// Command-line front end. run_command() is the whole program minus main();
// tests call it directly with an argument vector and capture the streams.
//
// Subcommands:
//   pseudolevis  table of pseudo-Levi classes
//   sheets       sheet table sorted by (n, dim); --pairs-view for the
//                (Levi envelope, rigid datum) presentation
//   poset        Jordan-class closure order (DOT, or node/edge lists as JSON)
//
// Exit codes: 0 success, 2 usage, 3 capability/missing data, 4 resource.

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lie/common.hpp"
#include "lie/sheets.hpp"

namespace lie::cli {

using json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1.0";

struct Options {
    std::string command;
    std::string type;
    std::string isogeny = "adjoint";
    int torus_rank = 0;
    std::string format = "text";
    bool pairs_view = false;
    std::string data_dir;  // resolved: flag, else env, else default
};

inline GroupSpec parse_group(const Options& opt) {
    GroupSpec spec;
    spec.central_torus_rank = opt.torus_rank;
    if (opt.torus_rank < 0) throw UsageError("--torus-rank must be nonnegative");
    std::string s = opt.type;
    if (s.empty()) {
        if (opt.torus_rank == 0) throw UsageError("--type is required (or a positive --torus-rank)");
    } else {
        std::size_t i = 0;
        while (i < s.size()) {
            char c = s[i];
            if (c < 'A' || c > 'G')
                throw UsageError("invalid simple type letter in '" + s + "'");
            std::size_t j = i + 1;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            if (j == i + 1) throw UsageError("missing rank after '" + std::string(1, c) + "'");
            SimpleType t{static_cast<Letter>(c), std::stoi(s.substr(i + 1, j - i - 1))};
            if (!valid_type(t)) throw UsageError("invalid simple type: " + type_string(t));
            spec.factors.push_back(t);
            i = j;
            if (i < s.size()) {
                if (s[i] != 'x' && s[i] != '*')
                    throw UsageError("expected 'x' between factors in '" + s + "'");
                ++i;
                if (i == s.size()) throw UsageError("trailing separator in '" + s + "'");
            }
        }
    }
    if (opt.isogeny == "adjoint") spec.isogeny = Isogeny::adjoint;
    else if (opt.isogeny == "sc" || opt.isogeny == "simply-connected" ||
             opt.isogeny == "simply_connected")
        spec.isogeny = Isogeny::simply_connected;
    else
        throw UsageError("unknown isogeny '" + opt.isogeny +
                         "' (expected adjoint or simply-connected)");
    return spec;
}

// --- small formatting helpers ------------------------------------------------

inline std::string coset_string(const Coset& t, const std::vector<bigint>& moduli) {
    if (t.empty()) return "1";
    std::string s = "[";
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) s += ", ";
        s += t[i].str() + " mod " + moduli[i].str();
    }
    return s + "]";
}

inline json coset_json(const Coset& t, const std::vector<bigint>& moduli) {
    json j;
    j["values"] = json::array();
    j["moduli"] = json::array();
    for (std::size_t i = 0; i < t.size(); ++i) {
        j["values"].push_back(t[i].convert_to<long long>());
        j["moduli"].push_back(moduli[i].convert_to<long long>());
    }
    return j;
}

inline std::string tuple_string(const OrbitTuple& o) {
    if (o.empty()) return "-";
    std::string s;
    for (std::size_t i = 0; i < o.size(); ++i) {
        if (i) s += " ";
        s += class_string(o[i]);
    }
    return s;
}

inline std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        out += c;
    }
    return out + "\"";
}

inline void write_csv_row(std::ostream& out, const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) out << ",";
        out << csv_quote(row[i]);
    }
    out << "\n";
}

inline json query_json(const Options& opt) {
    json q;
    q["command"] = opt.command;
    q["type"] = opt.type;
    q["isogeny"] = opt.isogeny;
    q["torus_rank"] = opt.torus_rank;
    q["format"] = opt.format;
    q["pairs_view"] = opt.pairs_view;
    return q;
}

// --- commands ----------------------------------------------------------------

inline json record_pseudolevis(Classification& cl, const Options& opt) {
    const auto& pls = cl.pseudo_levis();
    json payload = json::array();
    for (std::size_t i = 0; i < pls.size(); ++i) {
        const auto& pl = pls[i];
        bigint zorder = 1;
        for (const auto& d : pl.torsion.factors) zorder *= d;
        json row;
        row["index"] = i;
        row["type"] = pl.type.empty() ? "-" : pl.type;
        row["nodes"] = pl.sub.basis;
        row["is_levi"] = pl.is_levi;
        row["component_order"] = zorder.convert_to<long long>();
        row["dim_z0"] = pl.dim_z0;
        row["envelope"] = pls[pl.levi_envelope].type.empty() ? "-" : pls[pl.levi_envelope].type;
        row["admissible"] = pl.admissible.size();
        payload.push_back(std::move(row));
    }
    json rec;
    rec["schema_version"] = kSchemaVersion;
    rec["query"] = query_json(opt);
    rec["payload"] = std::move(payload);
    return rec;
}

inline json record_sheets(Classification& cl, const Options& opt) {
    const auto& sheets = cl.sheets();
    const auto& jc = cl.jordan_classes();
    const auto& pls = cl.pseudo_levis();

    std::vector<std::size_t> order(sheets.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    auto key = [&](std::size_t i) {
        const auto& s = sheets[i];
        const auto& j = jc[s.jordan];
        return std::make_tuple(s.n, s.dim, pls[j.pl].type, pls[j.pl].sub.basis, j.coset,
                               tuple_string(j.orbit));
    };
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return key(a) < key(b); });

    json payload = json::array();
    for (std::size_t i : order) {
        const auto& s = sheets[i];
        const auto& j = jc[s.jordan];
        const auto& pl = pls[j.pl];
        json row;
        if (opt.pairs_view) {
            row["levi_envelope"] = pls[pl.levi_envelope].type.empty()
                                       ? "-" : pls[pl.levi_envelope].type;
            row["pseudo_levi"] = pl.type.empty() ? "-" : pl.type;
        } else {
            row["type"] = pl.type.empty() ? "-" : pl.type;
        }
        row["nodes"] = pl.sub.basis;
        row["coset"] = coset_json(j.coset, pl.torsion.factors);
        row["class"] = json::array();
        for (const auto& u : j.orbit) row["class"].push_back(class_string(u));
        row["n"] = s.n;
        row["dim"] = s.dim;
        json flags;
        flags["dixmier"] = s.dixmier;
        flags["unipotent_up_to_center"] = s.unipotent_up_to_center;
        flags["genuine_unipotent"] = s.genuine_unipotent;
        flags["single_class"] = s.single_class;
        row["flags"] = std::move(flags);
        if (s.induced) {
            row["induced"] = json::array();
            for (const auto& u : *s.induced) row["induced"].push_back(class_string(u));
        }
        payload.push_back(std::move(row));
    }
    json rec;
    rec["schema_version"] = kSchemaVersion;
    rec["query"] = query_json(opt);
    rec["payload"] = std::move(payload);
    return rec;
}

inline std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

inline json record_poset(Classification& cl, const Options& opt) {
    const auto& jc = cl.jordan_classes();
    const auto& pls = cl.pseudo_levis();
    auto covers = cl.hasse();
    auto maximal = cl.maximal_jordan();
    std::set<int> maxset(maximal.begin(), maximal.end());

    json nodes = json::array();
    for (std::size_t i = 0; i < jc.size(); ++i) {
        const auto& j = jc[i];
        const auto& pl = pls[j.pl];
        json nd;
        nd["id"] = i;
        nd["type"] = pl.type.empty() ? "-" : pl.type;
        nd["coset"] = coset_json(j.coset, pl.torsion.factors);
        nd["class"] = json::array();
        for (const auto& u : j.orbit) nd["class"].push_back(class_string(u));
        nd["n"] = j.n;
        nd["sheet"] = maxset.count(static_cast<int>(i)) > 0;
        nodes.push_back(std::move(nd));
    }
    json edges = json::array();
    for (const auto& [a, b] : covers) edges.push_back(json::array({a, b}));

    json rec;
    rec["schema_version"] = kSchemaVersion;
    rec["query"] = query_json(opt);
    json payload;
    payload["nodes"] = std::move(nodes);
    payload["edges"] = std::move(edges);
    rec["payload"] = std::move(payload);
    return rec;
}

inline void print_poset_dot(std::ostream& out, Classification& cl) {
    const auto& jc = cl.jordan_classes();
    const auto& pls = cl.pseudo_levis();
    auto covers = cl.hasse();
    auto maximal = cl.maximal_jordan();
    std::set<int> maxset(maximal.begin(), maximal.end());
    out << "digraph jordan_classes {\n  rankdir=BT;\n";
    for (std::size_t i = 0; i < jc.size(); ++i) {
        const auto& j = jc[i];
        const auto& pl = pls[j.pl];
        std::string label = (pl.type.empty() ? "-" : pl.type) + " | " +
                            coset_string(j.coset, pl.torsion.factors) + " | " +
                            tuple_string(j.orbit) + " | n=" + std::to_string(j.n);
        out << "  n" << i << " [label=\"" << dot_escape(label) << "\"";
        if (maxset.count(static_cast<int>(i))) out << ", peripheries=2";
        out << "];\n";
    }
    for (const auto& [a, b] : covers) out << "  n" << a << " -> n" << b << ";\n";
    out << "}\n";
}

// --- plain-text / csv renderers ----------------------------------------------

inline void print_table(std::ostream& out, const std::vector<std::string>& header,
                        const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
    for (const auto& r : rows)
        for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
    auto line = [&](const std::vector<std::string>& r) {
        for (std::size_t c = 0; c < r.size(); ++c) {
            out << r[c];
            if (c + 1 < r.size()) out << std::string(width[c] - r[c].size() + 2, ' ');
        }
        out << "\n";
    };
    line(header);
    for (const auto& r : rows) line(r);
}

inline std::string nodes_string(const std::vector<int>& nodes) {
    std::string s;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (i) s += " ";
        s += std::to_string(nodes[i]);
    }
    return s.empty() ? "-" : s;
}

inline void render_rows(std::ostream& out, const std::string& format, const json& rec,
                        const std::vector<std::string>& header,
                        const std::vector<std::vector<std::string>>& rows) {
    if (format == "json") {
        out << rec.dump(2) << "\n";
    } else if (format == "csv") {
        write_csv_row(out, header);
        for (const auto& r : rows) write_csv_row(out, r);
    } else {
        print_table(out, header, rows);
    }
}

inline int run_pseudolevis(Classification& cl, const Options& opt, std::ostream& out) {
    json rec = record_pseudolevis(cl, opt);
    std::vector<std::string> header{"index", "type",   "nodes",      "is_levi",
                                    "|Z/Z0|", "dim_Z0", "envelope",   "admissible"};
    std::vector<std::vector<std::string>> rows;
    for (const auto& r : rec["payload"]) {
        rows.push_back({std::to_string(r["index"].get<int>()), r["type"].get<std::string>(),
                        nodes_string(r["nodes"].get<std::vector<int>>()),
                        r["is_levi"].get<bool>() ? "yes" : "no",
                        std::to_string(r["component_order"].get<long long>()),
                        std::to_string(r["dim_z0"].get<int>()), r["envelope"].get<std::string>(),
                        std::to_string(r["admissible"].get<std::size_t>())});
    }
    render_rows(out, opt.format, rec, header, rows);
    return 0;
}

inline int run_sheets(Classification& cl, const Options& opt, std::ostream& out) {
    json rec = record_sheets(cl, opt);
    std::vector<std::string> header;
    if (opt.pairs_view) header = {"levi_envelope", "pseudo_levi"};
    else header = {"type"};
    for (const char* h : {"nodes", "coset", "class", "n", "dim", "dixmier",
                          "unipotent_up_to_center", "genuine_unipotent", "single_class",
                          "induced"})
        header.push_back(h);
    std::vector<std::vector<std::string>> rows;
    for (const auto& r : rec["payload"]) {
        std::vector<std::string> row;
        if (opt.pairs_view) {
            row.push_back(r["levi_envelope"].get<std::string>());
            row.push_back(r["pseudo_levi"].get<std::string>());
        } else {
            row.push_back(r["type"].get<std::string>());
        }
        row.push_back(nodes_string(r["nodes"].get<std::vector<int>>()));
        std::string coset = "1";
        if (!r["coset"]["values"].empty()) {
            coset = "[";
            for (std::size_t i = 0; i < r["coset"]["values"].size(); ++i) {
                if (i) coset += ", ";
                coset += std::to_string(r["coset"]["values"][i].get<long long>()) + " mod " +
                         std::to_string(r["coset"]["moduli"][i].get<long long>());
            }
            coset += "]";
        }
        row.push_back(coset);
        std::string cls;
        for (const auto& c : r["class"]) {
            if (!cls.empty()) cls += " ";
            cls += c.get<std::string>();
        }
        row.push_back(cls.empty() ? "-" : cls);
        row.push_back(std::to_string(r["n"].get<long long>()));
        row.push_back(std::to_string(r["dim"].get<long long>()));
        for (const char* f :
             {"dixmier", "unipotent_up_to_center", "genuine_unipotent", "single_class"})
            row.push_back(r["flags"][f].get<bool>() ? "yes" : "no");
        std::string ind = "-";
        if (r.contains("induced")) {
            ind.clear();
            for (const auto& c : r["induced"]) {
                if (!ind.empty()) ind += " ";
                ind += c.get<std::string>();
            }
        }
        row.push_back(ind);
        rows.push_back(std::move(row));
    }
    render_rows(out, opt.format, rec, header, rows);
    return 0;
}

inline int run_poset(Classification& cl, const Options& opt, std::ostream& out) {
    if (opt.format == "csv") throw UsageError("poset output is DOT or JSON, not CSV");
    if (opt.format == "json") {
        out << record_poset(cl, opt).dump(2) << "\n";
    } else {
        print_poset_dot(out, cl);
    }
    return 0;
}

// Parse args (without argv[0]) and run. default_data_dir is the build-time
// fallback; LIE_DATA_DIR overrides it and --data-dir overrides both.
inline int run_command(std::vector<std::string> args, std::ostream& out, std::ostream& err,
                       const std::string& default_data_dir = "") {
    CLI::App app{"sheet and Jordan-class enumeration for reductive groups"};
    app.require_subcommand(1);

    Options opt;
    std::string data_dir_flag;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--type", opt.type, "Cartan type, e.g. C2 or A2xB3");
        sub->add_option("--isogeny", opt.isogeny, "adjoint (default) or simply-connected");
        sub->add_option("--torus-rank", opt.torus_rank, "rank of a central torus factor");
        sub->add_option("--data-dir", data_dir_flag, "directory with exceptional orbit tables");
        sub->add_option("--format", opt.format, "json, csv, or text (default)")
            ->check(CLI::IsMember({"json", "csv", "text"}));
    };
    auto* c_pl = app.add_subcommand("pseudolevis", "pseudo-Levi classes");
    auto* c_sh = app.add_subcommand("sheets", "sheet table");
    auto* c_po = app.add_subcommand("poset", "Jordan-class closure order");
    add_common(c_pl);
    add_common(c_sh);
    add_common(c_po);
    c_sh->add_flag("--pairs-view", opt.pairs_view,
                   "present sheets as (Levi envelope, rigid datum) pairs");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    opt.data_dir = default_data_dir;
    if (const char* env = std::getenv("LIE_DATA_DIR")) opt.data_dir = env;
    if (!data_dir_flag.empty()) opt.data_dir = data_dir_flag;

    try {
        GroupSpec spec = parse_group(opt);
        std::optional<std::string> dd;
        if (!opt.data_dir.empty()) dd = opt.data_dir;
        Classification cl(std::move(spec), dd);
        if (c_pl->parsed()) {
            opt.command = "pseudolevis";
            return run_pseudolevis(cl, opt, out);
        }
        if (c_sh->parsed()) {
            opt.command = "sheets";
            return run_sheets(cl, opt, out);
        }
        opt.command = "poset";
        return run_poset(cl, opt, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const CapabilityError& e) {
        err << "capability error: " << e.what();
        if (std::string(e.what()).find("exceptional data not loaded") != std::string::npos)
            err << " (expected " << (opt.data_dir.empty() ? "<data-dir>" : opt.data_dir)
                << "/exceptional/orbits.tsv)";
        err << "\n";
        return 3;
    } catch (const ResourceError& e) {
        err << "resource error: " << e.what() << "\n";
        return 4;
    }
}

} // namespace lie::cli
