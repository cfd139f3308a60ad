#include "twistcx/io.hpp"

namespace twistcx {

using nlohmann::json;

namespace {

[[noreturn]] void schema_error(const std::string& where, const std::string& what) {
    throw DocumentError("schema", where, where + ": " + what);
}

const json& member(const json& obj, const std::string& key, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end()) schema_error(where, "missing \"" + key + "\"");
    return *it;
}

long long integer(const json& value, const std::string& where) {
    if (!value.is_number_integer()) schema_error(where, "expected an integer");
    return value.get<long long>();
}

}  // namespace

std::string slot_name(const Summand& s) {
    return std::string(s.vertex == Vertex::zero ? "U_" : "V_") + std::to_string(s.position);
}

TwistedComplex complex_from_json(const json& doc, bool check) {
    if (!doc.is_object()) schema_error("document", "expected an object");
    for (const auto& [key, value] : doc.items())
        if (key != "n" && key != "char" && key != "betti0" && key != "summands" && key != "differential")
            schema_error(key, "unknown field");

    CategoryParams params;
    params.n = static_cast<int>(integer(member(doc, "n", "document"), "n"));
    const long long ch = integer(member(doc, "char", "document"), "char");
    if (ch < 0 || ch > 2147483647) throw DocumentError("parameters", "char", "char: out of range");
    if (auto it = doc.find("betti0"); it != doc.end() && !it->is_null()) {
        if (!it->is_array()) schema_error("betti0", "expected a list of integers");
        std::vector<int> b;
        for (std::size_t i = 0; i < it->size(); ++i)
            b.push_back(static_cast<int>(integer((*it)[i], "betti0[" + std::to_string(i) + "]")));
        params.betti0 = std::move(b);
    }
    try {
        params.field = Field(static_cast<std::uint32_t>(ch));
    } catch (const FieldError& e) {
        throw DocumentError("parameters", "char", std::string("char: ") + e.what());
    }
    if (auto problems = validate_params(params); !problems.empty())
        throw DocumentError("parameters", "document", problems.front());
    auto cat = Category::make(params);

    const json& summands = member(doc, "summands", "document");
    if (!summands.is_array()) schema_error("summands", "expected a list");
    std::vector<Summand> list;
    for (std::size_t i = 0; i < summands.size(); ++i) {
        const std::string where = "summands[" + std::to_string(i) + "]";
        const json& s = summands[i];
        if (!s.is_object()) schema_error(where, "expected {vertex, position}");
        const long long v = integer(member(s, "vertex", where), where + ".vertex");
        if (v != 0 && v != 1) schema_error(where + ".vertex", "must be 0 or 1");
        const long long pos = integer(member(s, "position", where), where + ".position");
        list.push_back({vertex_from_int(static_cast<int>(v)), static_cast<int>(pos)});
    }
    TwistedComplex c(cat, std::move(list));

    json empty = json::array();
    auto it = doc.find("differential");
    const json& diff = it == doc.end() ? empty : *it;
    if (!diff.is_array()) schema_error("differential", "expected a list");
    for (std::size_t i = 0; i < diff.size(); ++i) {
        const std::string where = "differential[" + std::to_string(i) + "]";
        const json& e = diff[i];
        if (!e.is_object()) schema_error(where, "expected {from, to, basis, coeff}");
        const long long from = integer(member(e, "from", where), where + ".from");
        const long long to = integer(member(e, "to", where), where + ".to");
        if (from < 0 || static_cast<std::size_t>(from) >= c.size()) schema_error(where + ".from", "no such summand");
        if (to < 0 || static_cast<std::size_t>(to) >= c.size()) schema_error(where + ".to", "no such summand");
        const json& name = member(e, "basis", where);
        if (!name.is_string()) schema_error(where + ".basis", "expected a basis name");
        auto id = cat->find(name.get<std::string>());
        if (!id) schema_error(where + ".basis", "unknown basis element \"" + name.get<std::string>() + "\"");
        const auto& el = cat->element(*id);
        const auto fa = static_cast<std::size_t>(from), tb = static_cast<std::size_t>(to);
        if (el.source != c.summand(fa).vertex || el.target != c.summand(tb).vertex)
            throw DocumentError("validation", where,
                                where + ": " + el.name + " does not go from Q" +
                                    std::to_string(index(c.summand(fa).vertex)) + " to Q" +
                                    std::to_string(index(c.summand(tb).vertex)));
        const json& coeff = member(e, "coeff", where);
        std::string text;
        if (coeff.is_string())
            text = coeff.get<std::string>();
        else if (coeff.is_number_integer())
            text = std::to_string(coeff.get<long long>());
        else
            schema_error(where + ".coeff", "expected a decimal string");
        try {
            c.add_to_entry(fa, tb, *id, Scalar::parse(cat->field(), text));
        } catch (const FieldError& err) {
            schema_error(where + ".coeff", err.what());
        }
    }

    if (check) {
        auto violations = validate(c);
        if (!violations.empty()) {
            const auto& v = violations.front();
            const std::string slot = "slot " + std::to_string(v.from) + " -> " + std::to_string(v.to) + " (" +
                                     slot_name(c.summand(v.from)) + " -> " + slot_name(c.summand(v.to)) + ")";
            throw DocumentError("validation", slot, to_string(v.kind) + " at " + slot + ": " + v.detail);
        }
    }
    return c;
}

TwistedComplex parse_complex(const std::string& text, bool check) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw DocumentError("json", "byte " + std::to_string(e.byte), e.what());
    }
    return complex_from_json(doc, check);
}

json to_json(const TwistedComplex& c) {
    const auto& cat = c.category();
    json doc;
    doc["n"] = cat.n();
    doc["char"] = cat.field().characteristic();
    if (cat.params().betti0) doc["betti0"] = *cat.params().betti0;
    json summands = json::array();
    for (const auto& s : c.summands()) summands.push_back({{"vertex", index(s.vertex)}, {"position", s.position}});
    doc["summands"] = std::move(summands);
    json diff = json::array();
    for (std::size_t a = 0; a < c.size(); ++a)
        for (std::size_t b = 0; b < c.size(); ++b)
            for (const auto& [id, coeff] : c.entry(a, b).terms())
                diff.push_back({{"from", a}, {"to", b}, {"basis", cat.element(id).name}, {"coeff", coeff.to_string()}});
    doc["differential"] = std::move(diff);
    return doc;
}

std::string serialize(const TwistedComplex& c) { return to_json(c).dump(2); }

}  // namespace twistcx
