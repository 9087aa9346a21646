#include "rbx/spec_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace rbx {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

constexpr const char* kFormatName = "rbx-algebra-v1";

ordered_json sparse_element(const FiniteDimAlgebra& a, const AlgebraElement& x) {
    ordered_json out = ordered_json::array();
    for (int i = 0; i < a.dim(); ++i)
        if (!x.coeff(i).is_zero())
            out.push_back(ordered_json::array({a.basis().name(i), x.coeff(i).to_json()}));
    return out;
}

}  // namespace

ordered_json algebra_to_json(const FiniteDimAlgebra& algebra, const HopfAlgebra* hopf) {
    ordered_json doc;
    doc["format"] = kFormatName;
    doc["ring"] = algebra.ring().to_json();
    doc["basis"] = algebra.basis().names();
    doc["unit"] = sparse_element(algebra, algebra.unit());

    ordered_json mult = ordered_json::array();
    for (int i = 0; i < algebra.dim(); ++i)
        for (int j = 0; j < algebra.dim(); ++j) {
            const auto& terms = algebra.constants().product(i, j);
            if (terms.empty()) continue;
            ordered_json list = ordered_json::array();
            for (const ScTerm& t : terms)
                list.push_back(ordered_json::array({algebra.basis().name(t.k), t.c.to_json()}));
            mult.push_back(
                ordered_json::array({algebra.basis().name(i), algebra.basis().name(j), list}));
        }
    doc["mult"] = std::move(mult);

    if (hopf != nullptr) {
        ordered_json cop = ordered_json::array();
        for (int k = 0; k < algebra.dim(); ++k) {
            const auto& terms = hopf->coproduct.terms(k);
            if (terms.empty()) continue;
            ordered_json list = ordered_json::array();
            for (const CoproductTerm& t : terms)
                list.push_back(ordered_json::array(
                    {algebra.basis().name(t.a), algebra.basis().name(t.b), t.c.to_json()}));
            cop.push_back(ordered_json::array({algebra.basis().name(k), list}));
        }
        doc["coproduct"] = std::move(cop);

        ordered_json counit = ordered_json::array();
        for (int k = 0; k < algebra.dim(); ++k)
            if (!hopf->counit[static_cast<size_t>(k)].is_zero())
                counit.push_back(ordered_json::array(
                    {algebra.basis().name(k), hopf->counit[static_cast<size_t>(k)].to_json()}));
        doc["counit"] = std::move(counit);

        ordered_json antipode = ordered_json::array();
        for (int k = 0; k < algebra.dim(); ++k) {
            ordered_json col = ordered_json::array();
            for (int r = 0; r < algebra.dim(); ++r)
                if (!hopf->antipode.at(r, k).is_zero())
                    col.push_back(ordered_json::array(
                        {algebra.basis().name(r), hopf->antipode.at(r, k).to_json()}));
            if (!col.empty())
                antipode.push_back(ordered_json::array({algebra.basis().name(k), col}));
        }
        doc["antipode"] = std::move(antipode);
    }
    return doc;
}

namespace {

int label_index(const Basis& basis, const json& j, const char* where) {
    if (!j.is_string())
        throw std::invalid_argument(std::string(where) + ": basis label must be a string, got " +
                                    j.dump());
    auto idx = basis.find(j.get<std::string>());
    if (!idx)
        throw std::invalid_argument(std::string(where) + ": unknown basis label '" +
                                    j.get<std::string>() + "'");
    return *idx;
}

}  // namespace

LoadedAlgebra algebra_from_json(const json& doc) {
    if (!doc.is_object()) throw std::invalid_argument("algebra spec must be a JSON object");
    if (!doc.contains("format") || doc["format"] != kFormatName)
        throw std::invalid_argument(std::string("algebra spec must declare \"format\": \"") +
                                    kFormatName + "\"");
    for (const char* key : {"ring", "basis", "unit", "mult"})
        if (!doc.contains(key))
            throw std::invalid_argument("algebra spec is missing the \"" + std::string(key) +
                                        "\" block");

    ScalarRing ring = ScalarRing::from_json(doc["ring"]);
    if (!doc["basis"].is_array() || doc["basis"].empty())
        throw std::invalid_argument("\"basis\" must be a non-empty list of labels");
    std::vector<std::string> labels;
    for (const auto& l : doc["basis"]) {
        if (!l.is_string()) throw std::invalid_argument("basis labels must be strings");
        labels.push_back(l.get<std::string>());
    }
    Basis basis(std::move(labels));
    const int n = basis.dim();

    AlgebraElement unit(ring, n);
    if (!doc["unit"].is_array()) throw std::invalid_argument("\"unit\" must be a [label, scalar] list");
    for (const auto& entry : doc["unit"]) {
        if (!entry.is_array() || entry.size() != 2)
            throw std::invalid_argument("\"unit\" entries must be [label, scalar] pairs");
        int i = label_index(basis, entry[0], "unit");
        unit.set_coeff(i, unit.coeff(i) + embed(Scalar::from_json(entry[1]), ring));
    }

    StructureConstants sc(ring, n);
    if (!doc["mult"].is_array()) throw std::invalid_argument("\"mult\" must be a list of triples");
    for (const auto& entry : doc["mult"]) {
        if (!entry.is_array() || entry.size() != 3 || !entry[2].is_array())
            throw std::invalid_argument("\"mult\" entries must be [i, j, [[k, scalar], ...]]");
        int i = label_index(basis, entry[0], "mult");
        int j = label_index(basis, entry[1], "mult");
        for (const auto& term : entry[2]) {
            if (!term.is_array() || term.size() != 2)
                throw std::invalid_argument("\"mult\" terms must be [k, scalar] pairs");
            sc.add_term(i, j, label_index(basis, term[0], "mult"), Scalar::from_json(term[1]));
        }
    }

    FiniteDimAlgebra algebra(std::move(basis), std::move(sc), std::move(unit));

    bool any_hopf = doc.contains("coproduct") || doc.contains("counit") || doc.contains("antipode");
    if (!any_hopf) return LoadedAlgebra{std::move(algebra), std::nullopt};
    for (const char* key : {"coproduct", "counit", "antipode"})
        if (!doc.contains(key))
            throw std::invalid_argument("Hopf blocks are all-or-nothing; missing \"" +
                                        std::string(key) + "\"");

    Coproduct cop(algebra.ring(), n);
    for (const auto& entry : doc["coproduct"]) {
        if (!entry.is_array() || entry.size() != 2 || !entry[1].is_array())
            throw std::invalid_argument("\"coproduct\" entries must be [k, [[a, b, scalar], ...]]");
        int k = label_index(algebra.basis(), entry[0], "coproduct");
        for (const auto& term : entry[1]) {
            if (!term.is_array() || term.size() != 3)
                throw std::invalid_argument("\"coproduct\" terms must be [a, b, scalar]");
            cop.add_term(k, label_index(algebra.basis(), term[0], "coproduct"),
                         label_index(algebra.basis(), term[1], "coproduct"),
                         Scalar::from_json(term[2]));
        }
    }

    std::vector<Scalar> counit(static_cast<size_t>(n), Scalar::zero(algebra.ring()));
    for (const auto& entry : doc["counit"]) {
        if (!entry.is_array() || entry.size() != 2)
            throw std::invalid_argument("\"counit\" entries must be [label, scalar] pairs");
        int k = label_index(algebra.basis(), entry[0], "counit");
        counit[static_cast<size_t>(k)] =
            counit[static_cast<size_t>(k)] + embed(Scalar::from_json(entry[1]), algebra.ring());
    }

    Matrix antipode(algebra.ring(), n, n);
    for (const auto& entry : doc["antipode"]) {
        if (!entry.is_array() || entry.size() != 2 || !entry[1].is_array())
            throw std::invalid_argument("\"antipode\" entries must be [k, [[row, scalar], ...]]");
        int k = label_index(algebra.basis(), entry[0], "antipode");
        for (const auto& term : entry[1]) {
            if (!term.is_array() || term.size() != 2)
                throw std::invalid_argument("\"antipode\" terms must be [row, scalar] pairs");
            int r = label_index(algebra.basis(), term[0], "antipode");
            antipode.set(r, k, antipode.at(r, k) + embed(Scalar::from_json(term[1]), algebra.ring()));
        }
    }

    HopfAlgebra hopf{algebra, std::move(cop), std::move(counit), std::move(antipode)};
    return LoadedAlgebra{std::move(algebra), std::move(hopf)};
}

LoadedAlgebra load_algebra_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open algebra spec '" + path + "'");
    json doc;
    try {
        in >> doc;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("JSON parse error in '" + path + "': " + e.what());
    }
    return algebra_from_json(doc);
}

void write_algebra_file(const std::string& path, const ordered_json& doc) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write '" + path + "'");
    out << doc.dump(2) << "\n";
    if (!out) throw std::invalid_argument("write failed for '" + path + "'");
}

}  // namespace rbx
