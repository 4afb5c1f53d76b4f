#include "arrtop/artifacts.hpp"

#include <json.hpp>

#include "arrtop/error.hpp"
#include "arrtop/group.hpp"
#include "arrtop/oracle.hpp"
#include "arrtop/orbit.hpp"
#include "arrtop/salvetti.hpp"

namespace arrtop {

namespace {

using nlohmann::json;

json arrangement_obj(const Arrangement& a) {
    json j;
    j["dimension"] = a.dimension();
    if (a.combinatorial()) {
        j["combinatorial_fan"] = a.size();
    } else {
        json rows = json::array();
        for (std::size_t k = 0; k < a.size(); ++k) {
            json row = json::array();
            for (const auto& c : a.normal(k)) row.push_back(rational_to_string(c));
            rows.push_back(std::move(row));
        }
        j["hyperplanes"] = std::move(rows);
    }
    return j;
}

json rat_vec_obj(const RatVec& v) {
    json row = json::array();
    for (const auto& c : v) row.push_back(rational_to_string(c));
    return row;
}

json homology_obj(const std::vector<HomologyGroup>& hs) {
    json out = json::array();
    for (const auto& h : hs) {
        json t = json::array();
        for (const auto& f : h.torsion) t.push_back(f.str());
        out.push_back({{"betti", h.betti}, {"torsion", std::move(t)}});
    }
    return out;
}

std::string homology_text(const HomologyGroup& h) {
    std::string s;
    if (h.betti) s = h.betti == 1 ? "Z" : "Z^" + std::to_string(h.betti);
    for (const auto& t : h.torsion) s += (s.empty() ? "Z/" : " + Z/") + t.str();
    return s.empty() ? "0" : s;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string hasse_dot(const std::string& name, const std::vector<std::string>& nodes,
                      const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    std::string out = "digraph " + name + " {\n  rankdir=BT;\n";
    for (const auto& n : nodes) out += "  \"" + n + "\";\n";
    for (const auto& [lo, hi] : edges) out += "  \"" + nodes[lo] + "\" -> \"" + nodes[hi] + "\";\n";
    return out + "}\n";
}

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        fail(ErrorKind::Parse, std::string("bad JSON: ") + e.what());
    }
}

std::string word_text(const Word& word, const std::vector<std::string>& names) {
    std::string out;
    for (const auto& l : word) {
        if (!out.empty()) out += " ";
        out += names[l.gen] + (l.exp < 0 ? "^-1" : "");
    }
    return out;
}

json axiom_obj(const AxiomReport& rep) {
    return {{"l0", rep.l0},         {"l1", rep.l1},   {"l2", rep.l2}, {"l3", rep.l3},
            {"pass", rep.pass()},   {"witness", rep.witness}};
}

void append_check_line(std::string& out, const std::string& label, bool pass,
                       const std::string& witness) {
    out += label + ": " + (pass ? "pass" : "fail") + (pass || witness.empty() ? "" : " (" + witness + ")") + "\n";
}

} // namespace

Arrangement arrangement_from_json(const std::string& text) {
    json j = parse_json(text);
    if (!j.is_object() || !j.contains("dimension") || !j.contains("hyperplanes"))
        fail(ErrorKind::Parse, "arrangement JSON needs \"dimension\" and \"hyperplanes\"");
    if (!j["dimension"].is_number_unsigned())
        fail(ErrorKind::Parse, "\"dimension\" must be a non-negative integer");
    if (!j["hyperplanes"].is_array())
        fail(ErrorKind::Parse, "\"hyperplanes\" must be an array of coefficient rows");

    std::vector<RatVec> normals;
    for (const auto& row : j["hyperplanes"]) {
        if (!row.is_array())
            fail(ErrorKind::Parse, "hyperplane entries must be arrays of rationals");
        RatVec v;
        for (const auto& c : row) {
            if (c.is_number_integer())
                v.push_back(Rat(c.get<long long>()));
            else if (c.is_string())
                v.push_back(parse_rational(c.get<std::string>()));
            else
                fail(ErrorKind::Parse, "coefficients must be \"p/q\" strings or integers");
        }
        if (v.size() != j["dimension"].get<std::size_t>())
            fail(ErrorKind::Parse, "hyperplane arity does not match \"dimension\"");
        normals.push_back(std::move(v));
    }
    return Arrangement::from_normals(std::move(normals));
}

Arrangement builtin_arrangement(const std::string& name, bool essentialize) {
    auto colon = name.find(':');
    std::string head = name.substr(0, colon);
    std::size_t arg = 0;
    if (colon != std::string::npos) {
        const std::string tail = name.substr(colon + 1);
        if (tail.empty() || tail.find_first_not_of("0123456789") != std::string::npos)
            fail(ErrorKind::Invalid, "bad builtin parameter in '" + name + "'");
        arg = std::stoul(tail);
    }

    if (head == "coords" && colon == std::string::npos) {
        if (essentialize) fail(ErrorKind::Invalid, "only braid builtins support --essentialize");
        return coords_arrangement();
    }
    if (head == "braid" && colon != std::string::npos) return braid_arrangement(arg, essentialize);
    if (head == "dihedral" && colon != std::string::npos) {
        if (essentialize) fail(ErrorKind::Invalid, "only braid builtins support --essentialize");
        return dihedral_arrangement(arg);
    }
    fail(ErrorKind::Invalid,
         "unknown builtin '" + name + "' (expected coords, braid:L, or dihedral:M)");
}

std::string arrangement_json(const Arrangement& a) { return dump(arrangement_obj(a)); }

std::string render_faces(const Arrangement& a, std::size_t cap, RenderFormat f) {
    FacePoset poset = enumerate_faces(a, cap);
    const auto& faces = poset.faces();

    std::vector<std::string> labels;
    std::size_t max_codim = 0;
    for (const auto& face : faces) {
        labels.push_back(face.covector.str());
        max_codim = std::max(max_codim, face.codim);
    }
    auto edges = poset.covers();

    if (f == RenderFormat::dot) return hasse_dot("faces", labels, edges);

    std::vector<std::size_t> counts(max_codim + 1, 0);
    for (const auto& face : faces) ++counts[face.codim];

    if (f == RenderFormat::text) {
        std::string out = "faces: " + std::to_string(faces.size()) +
                          "  chambers: " + std::to_string(poset.chamber_indices().size()) + "\n";
        for (const auto& face : faces) {
            out += face.covector.str() + "  codim " + std::to_string(face.codim);
            if (face.witness) {
                out += "  witness (";
                for (std::size_t i = 0; i < face.witness->size(); ++i)
                    out += (i ? ", " : "") + rational_to_string((*face.witness)[i]);
                out += ")";
            }
            out += "\n";
        }
        return out;
    }

    json j;
    j["arrangement"] = arrangement_obj(a);
    j["counts_by_codim"] = counts;
    json fl = json::array();
    for (const auto& face : faces) {
        json fo{{"codim", face.codim}, {"covector", face.covector.str()}};
        if (face.witness) fo["witness"] = rat_vec_obj(*face.witness);
        fl.push_back(std::move(fo));
    }
    j["faces"] = std::move(fl);
    json el = json::array();
    for (const auto& [lo, hi] : edges) el.push_back({labels[lo], labels[hi]});
    j["covering_edges"] = std::move(el);
    return dump(j);
}

std::string render_salvetti(const Arrangement& a, std::size_t cap, bool with_homology,
                            RenderFormat f) {
    if (!a.combinatorial() && !is_essential(a))
        fail(ErrorKind::Precondition, "arrangement is not essential");
    FacePoset poset = enumerate_faces(a, cap);
    SalPoset sal = build_salvetti(poset);

    std::vector<std::string> labels;
    for (const auto& c : sal.cells()) labels.push_back(c.label());
    auto edges = sal.as_poset().covers();

    if (f == RenderFormat::dot) return hasse_dot("salvetti", labels, edges);

    std::vector<HomologyGroup> hs;
    if (with_homology) hs = homology(sal_order_complex(sal));

    if (f == RenderFormat::text) {
        std::string out = "cells: " + std::to_string(sal.size()) + "  by dimension:";
        for (auto c : sal.counts_by_dim()) out += " " + std::to_string(c);
        out += "\n";
        for (std::size_t i = 0; i < sal.size(); ++i)
            out += labels[i] + "  dim " + std::to_string(sal.dim(i)) + "  covector " +
                   to_complex_covector(sal.cell(i)).str() + "\n";
        for (std::size_t d = 0; d < hs.size(); ++d)
            out += "H" + std::to_string(d) + ": " + homology_text(hs[d]) + "\n";
        return out;
    }

    json j;
    j["arrangement"] = arrangement_obj(a);
    j["cell_counts_by_dim"] = sal.counts_by_dim();
    json cells = json::array(), table = json::array();
    for (std::size_t i = 0; i < sal.size(); ++i) {
        const SalCell& c = sal.cell(i);
        std::string ccov = to_complex_covector(c).str();
        cells.push_back({{"chamber", c.chamber.str()},
                         {"complex_covector", ccov},
                         {"dim", sal.dim(i)},
                         {"face", c.face.str()}});
        table.push_back({labels[i], ccov});
    }
    j["cells"] = std::move(cells);
    j["correspondence"] = std::move(table);
    json el = json::array();
    for (const auto& [lo, hi] : edges) el.push_back({labels[lo], labels[hi]});
    j["covering_edges"] = std::move(el);
    if (!a.combinatorial()) {
        json ev = json::array();
        for (const auto& v : embed_vertices(a, poset, sal))
            ev.push_back({{"cell", v.cell.label()}, {"im", rat_vec_obj(v.im)}, {"re", rat_vec_obj(v.re)}});
        j["embedded_vertices"] = std::move(ev);
    }
    if (with_homology) j["homology"] = homology_obj(hs);
    return dump(j);
}

std::string render_presentation(const Arrangement& a, std::size_t cap, RenderFormat f) {
    FacePoset poset = enumerate_faces(a, cap);
    ReflectionGroup w = generate_group(a, poset);
    Presentation pres = presentation(a, poset, w);
    SalPoset sal = build_salvetti(poset);
    OrbitCellComplexModel quotient = quotient_sal(sal, w);

    bool rank2 = a.combinatorial() || (a.dimension() == 2 && is_essential(a));
    Word word;
    if (rank2) word = boundary_word(a, poset, w);

    if (f == RenderFormat::text) {
        std::string out = pres.text() + "\n";
        if (rank2) out += "boundary word: " + word_text(word, pres.generators) + "\n";
        out += "quotient cells by dimension:";
        for (auto c : quotient.counts_by_dim()) out += " " + std::to_string(c);
        return out + "\n";
    }

    json j;
    j["generators"] = pres.generators;
    json rels = json::array();
    for (const auto& r : pres.relations)
        rels.push_back({{"left", r.left}, {"m", r.m}, {"right", r.right}});
    j["relations"] = std::move(rels);
    j["text"] = pres.text();
    if (rank2) {
        json wl = json::array();
        for (const auto& l : word)
            wl.push_back({{"exp", l.exp}, {"gen", pres.generators[l.gen]}});
        j["boundary_word"] = std::move(wl);
    }
    json classes = json::array();
    for (const auto& c : quotient.classes)
        classes.push_back(
            {{"dim", c.dim}, {"rep", sal.cell(c.rep).label()}, {"size", c.members.size()}});
    j["quotient"] = {{"classes", std::move(classes)}, {"counts_by_dim", quotient.counts_by_dim()}};
    return dump(j);
}

std::string render_group(const Arrangement& a, std::size_t cap) {
    FacePoset poset = enumerate_faces(a, cap);
    ReflectionGroup w = generate_group(a, poset);

    json j;
    j["base_chamber"] = w.base_chamber().str();
    json gw = json::array();
    for (auto wall : w.generator_walls()) gw.push_back(wall + 1);
    j["generator_walls"] = std::move(gw);
    j["order"] = w.order();
    json els = json::array();
    for (const auto& g : w.elements()) {
        json perm = json::array(), flips = json::array(), word = json::array();
        for (std::size_t k = 0; k < g.action.perm.size(); ++k) {
            perm.push_back(g.action.perm[k] + 1);
            flips.push_back(static_cast<int>(g.action.flips[k]));
        }
        for (auto s : g.word) word.push_back(s + 1);
        els.push_back({{"flips", std::move(flips)}, {"perm", std::move(perm)}, {"word", std::move(word)}});
    }
    j["elements"] = std::move(els);
    return dump(j);
}

CheckOutcome render_checks(const Arrangement& a, std::size_t cap, std::uint64_t seed,
                           RenderFormat f) {
    FacePoset poset = enumerate_faces(a, cap);
    AxiomReport axioms = check_covector_axioms(poset.covectors());
    SalPoset sal = build_salvetti(poset);
    OrderIsoReport iso = check_sal_complex_order_iso(a, poset, sal);

    bool group_applicable = true;
    std::string group_reason;
    TransitiveFreeReport tf;
    std::optional<ReflectionGroup> w;
    try {
        w = generate_group(a, poset);
        tf = check_transitive_free(*w, poset);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::Symmetry) throw;
        group_applicable = false;
        group_reason = e.what();
    }

    bool oracle_applicable = !a.combinatorial();
    OracleReport oracle;
    if (oracle_applicable) oracle = sampling_oracle(a, poset, seed);

    CheckOutcome outcome;
    outcome.symmetry_pass = !group_applicable || tf.pass();
    outcome.all_pass = axioms.pass() && iso.pass() && outcome.symmetry_pass &&
                       (!oracle_applicable || oracle.pass());

    if (f == RenderFormat::text) {
        std::string out;
        append_check_line(out, "covector axioms", axioms.pass(), axioms.witness);
        append_check_line(out, "complex covector order isomorphism", iso.pass(), iso.witness);
        if (group_applicable)
            append_check_line(out, "transitive free chamber action", tf.pass(), tf.witness);
        else
            out += "transitive free chamber action: skipped (" + group_reason + ")\n";
        if (oracle_applicable)
            append_check_line(out, "sampling oracle", oracle.pass(), oracle.witness);
        else
            out += "sampling oracle: skipped (combinatorial fan)\n";
        out += outcome.all_pass ? "all checks passed\n" : "some checks failed\n";
        outcome.out = std::move(out);
        return outcome;
    }

    json j;
    j["all_pass"] = outcome.all_pass;
    j["arrangement"] = arrangement_obj(a);
    json checks;
    checks["covector_axioms"] = axiom_obj(axioms);
    checks["order_iso"] = {{"decode_matches_image", iso.decode_matches_image},
                           {"injective", iso.injective},
                           {"order_preserving", iso.order_iso},
                           {"pass", iso.pass()},
                           {"witness", iso.witness},
                           {"witness_points", iso.witness_points_match}};
    json tfj{{"applicable", group_applicable}};
    if (group_applicable) {
        tfj["free"] = tf.free;
        tfj["order_matches"] = tf.order_matches;
        tfj["pass"] = tf.pass();
        tfj["transitive"] = tf.transitive;
        tfj["witness"] = tf.witness;
    } else {
        tfj["reason"] = group_reason;
    }
    checks["transitive_free"] = std::move(tfj);
    json oj{{"applicable", oracle_applicable}};
    if (oracle_applicable) {
        oj["ambient_samples"] = oracle.ambient_samples;
        oj["distinct_covectors"] = oracle.distinct;
        oj["equal"] = oracle.equal;
        oj["extra"] = oracle.extra;
        oj["flats"] = oracle.flats;
        oj["missing"] = oracle.missing;
        oj["pass"] = oracle.pass();
        oj["seed"] = seed;
        oj["subset"] = oracle.subset;
        oj["witness"] = oracle.witness;
    }
    checks["oracle"] = std::move(oj);
    j["checks"] = std::move(checks);
    j["counts"] = {{"chambers", poset.chamber_indices().size()},
                   {"faces", poset.size()},
                   {"salvetti_cells", sal.counts_by_dim()}};
    if (group_applicable) {
        json go = parse_json(render_group(a, cap));
        j["group"] = std::move(go);
    }
    outcome.out = dump(j);
    return outcome;
}

CheckOutcome render_face_file_checks(const std::string& text, RenderFormat f) {
    json j = parse_json(text);
    std::vector<SignVector> covectors;
    auto push = [&](const json& item) {
        if (item.is_string())
            covectors.emplace_back(item.get<std::string>());
        else if (item.is_object() && item.contains("covector") && item["covector"].is_string())
            covectors.emplace_back(item["covector"].get<std::string>());
        else
            fail(ErrorKind::Parse, "face entries must be covector strings");
    };
    if (j.is_object() && j.contains("covectors") && j["covectors"].is_array())
        for (const auto& item : j["covectors"]) push(item);
    else if (j.is_object() && j.contains("faces") && j["faces"].is_array())
        for (const auto& item : j["faces"]) push(item);
    else
        fail(ErrorKind::Parse, "face file needs a \"covectors\" or \"faces\" array");

    AxiomReport axioms = check_covector_axioms(covectors);
    CheckOutcome outcome;
    outcome.all_pass = axioms.pass();

    if (f == RenderFormat::text) {
        append_check_line(outcome.out, "covector axioms", axioms.pass(), axioms.witness);
        outcome.out += outcome.all_pass ? "all checks passed\n" : "some checks failed\n";
        return outcome;
    }
    json out;
    out["all_pass"] = outcome.all_pass;
    out["checks"] = {{"covector_axioms", axiom_obj(axioms)}};
    outcome.out = dump(out);
    return outcome;
}

} // namespace arrtop
