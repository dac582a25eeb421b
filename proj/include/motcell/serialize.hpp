// Text, JSON and DOT emission. JSON documents are built with ordered keys
// and dumped once, so identical inputs produce byte-identical output.
#pragma once

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "motcell/bb_engine.hpp"
#include "motcell/motive.hpp"
#include "motcell/parabolic.hpp"
#include "motcell/poly.hpp"

namespace motcell {

using OrderedJson = nlohmann::ordered_json;

inline OrderedJson cells_to_json(const CellDecomposition& cells) {
    OrderedJson arr = OrderedJson::array();
    for (const Cell& c : cells.cells) {
        OrderedJson jc;
        jc["index"] = c.index;
        jc["fixed_point"] = c.fixed_point;
        jc["dimension"] = c.dimension;
        jc["weight_signs"] = c.weight_signs;
        arr.push_back(std::move(jc));
    }
    return arr;
}

inline OrderedJson motive_to_json(const MotivicDecomposition& motive) {
    OrderedJson arr = OrderedJson::array();
    for (const auto& s : motive.summands) {
        OrderedJson js;
        js["twist"] = s.twist;
        js["shift"] = s.shift;
        js["multiplicity"] = s.multiplicity;
        arr.push_back(std::move(js));
    }
    return arr;
}

inline OrderedJson ledger_to_json(const CofiberLedger& ledger) {
    OrderedJson out;
    out["note"] = ledger.note;
    OrderedJson arr = OrderedJson::array();
    for (const CofiberEntry& e : ledger.entries) {
        OrderedJson je;
        je["step"] = e.step;
        je["open_before"] = e.open_before;
        je["open_after"] = e.open_after;
        je["base"] = e.base;
        je["resolved"] = e.resolved;
        if (e.resolved) {
            OrderedJson spheres = OrderedJson::array();
            for (const SphereSymbol& s : e.spheres) {
                OrderedJson js;
                js["p"] = s.p;
                js["q"] = s.q;
                spheres.push_back(std::move(js));
            }
            je["spheres"] = std::move(spheres);
        } else {
            je["thom"] = e.thom_label;
        }
        je["cell_dim"] = e.cell_dim;
        arr.push_back(std::move(je));
    }
    out["entries"] = std::move(arr);
    return out;
}

// The one document shape shared by the gp/toric/quadric subcommands.
inline OrderedJson decomposition_document(const CellDecomposition& cells,
                                          const CofiberLedger& ledger,
                                          const MotivicDecomposition& motive) {
    OrderedJson doc;
    doc["space"] = cells.space_name;
    doc["cells"] = cells_to_json(cells);
    doc["poincare"] = poincare_polynomial(cells).coeffs();
    doc["motive"] = motive_to_json(motive);
    doc["ledger"] = ledger_to_json(ledger);
    doc["cocharacter"] = cells.cocharacter_used;
    return doc;
}

inline OrderedJson error_document(const std::string& kind, const std::string& message) {
    OrderedJson doc;
    doc["error"]["kind"] = kind;
    doc["error"]["message"] = message;
    return doc;
}

inline std::string sphere_wedge_str(const std::vector<SphereSymbol>& spheres) {
    if (spheres.empty()) return "(zero object)";
    std::string s;
    for (size_t i = 0; i < spheres.size(); ++i) {
        if (i) s += " v ";
        s += spheres[i].str();
    }
    return s;
}

inline std::string ledger_text(const CofiberLedger& ledger) {
    std::ostringstream os;
    os << "ledger for " << ledger.space_name << " (dim " << ledger.ambient_dimension << ")\n";
    if (!ledger.note.empty()) os << "  stage: " << ledger.note << "\n";
    for (const CofiberEntry& e : ledger.entries) {
        if (e.base) {
            os << "  base     " << e.open_after << " ~ "
               << (e.resolved ? sphere_wedge_str(e.spheres) : e.thom_label) << "\n";
        } else {
            os << "  cofiber  " << e.open_before << " -> " << e.open_after << " -> "
               << (e.resolved ? sphere_wedge_str(e.spheres) : e.thom_label) << "\n";
        }
    }
    return os.str();
}

inline std::string decomposition_text(const CellDecomposition& cells,
                                      const CofiberLedger& ledger,
                                      const MotivicDecomposition& motive) {
    std::ostringstream os;
    os << "space " << cells.space_name << "  (dim " << cells.ambient_dimension << ", "
       << cells.cells.size() << " cells)\n";
    if (!cells.cocharacter_used.empty()) {
        os << "cocharacter (";
        for (size_t i = 0; i < cells.cocharacter_used.size(); ++i) {
            if (i) os << ",";
            os << cells.cocharacter_used[i];
        }
        os << ")\n";
    }
    for (const Cell& c : cells.cells)
        os << "  cell " << c.index << "  dim " << c.dimension << "  at " << c.fixed_point << "  ["
           << c.weight_signs << "]\n";
    os << "poincare " << poincare_polynomial(cells).str() << "\n";
    os << "motive ";
    for (size_t i = 0; i < motive.summands.size(); ++i) {
        const auto& s = motive.summands[i];
        if (i) os << " + ";
        os << "Z(" << s.twist << ")[" << s.shift << "]";
        if (s.multiplicity > 1) os << "^" << s.multiplicity;
    }
    os << "\n" << ledger_text(ledger);
    return os.str();
}

// One node per representative labeled "word: length", one edge per cover,
// graded left to right by length.
inline std::string hasse_to_dot(const HasseDiagram& hasse, const std::string& title) {
    std::ostringstream os;
    os << "digraph \"" << title << "\" {\n  rankdir=LR;\n  node [shape=box];\n";
    for (size_t i = 0; i < hasse.nodes.size(); ++i)
        os << "  n" << i << " [label=\"" << hasse.nodes[i].word_string() << ": "
           << hasse.nodes[i].length() << "\"];\n";
    int max_len = 0;
    for (const auto& w : hasse.nodes) max_len = std::max(max_len, w.length());
    for (int l = 0; l <= max_len; ++l) {
        std::vector<size_t> level;
        for (size_t i = 0; i < hasse.nodes.size(); ++i)
            if (hasse.nodes[i].length() == l) level.push_back(i);
        if (level.empty()) continue;
        os << "  { rank=same;";
        for (size_t i : level) os << " n" << i << ";";
        os << " }\n";
    }
    for (const auto& [u, w] : hasse.edges) os << "  n" << u << " -> n" << w << ";\n";
    os << "}\n";
    return os.str();
}

inline OrderedJson group_strata_document(const GroupStrataReport& report) {
    OrderedJson doc;
    doc["space"] = report.group_name;
    doc["dim_borel"] = report.dim_borel;
    doc["dim_group"] = report.dim_group;
    doc["stratum_count"] = report.strata.size();
    OrderedJson arr = OrderedJson::array();
    for (const auto& s : report.strata) {
        OrderedJson js;
        js["word"] = s.word;
        js["affine_dim"] = s.affine_dim;
        arr.push_back(std::move(js));
    }
    doc["strata"] = std::move(arr);
    doc["note"] = "stratumwise cellularity inventory; no wedge splitting of the group is claimed";
    return doc;
}

inline std::string group_strata_text(const GroupStrataReport& report) {
    std::ostringstream os;
    os << report.group_name << "  dim G = " << report.dim_group << ", dim B = " << report.dim_borel
       << ", strata = " << report.strata.size() << "\n";
    for (const auto& s : report.strata)
        os << "  A^" << s.affine_dim << " x B   (w = " << s.word << ")\n";
    os << "note: stratumwise cellularity inventory; no wedge splitting of the group is claimed\n";
    return os.str();
}

} // namespace motcell
