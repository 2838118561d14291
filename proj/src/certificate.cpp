#include "gkc/certificate.hpp"

#include "gkc/graph_io.hpp"

#include <limits>

namespace gkc {

using nlohmann::json;

namespace {

const std::pair<Tag, const char*> kTagNames[] = {
    {Tag::Zsigmondy, "Zsigmondy"},       {Tag::Lemma5_2, "Lemma5.2"},
    {Tag::Lemma5_3_ii, "Lemma5.3.ii"},   {Tag::Lemma5_3_iii, "Lemma5.3.iii"},
    {Tag::Lemma5_3_iv, "Lemma5.3.iv"},   {Tag::Lemma5_4, "Lemma5.4"},
    {Tag::Lemma5_5_AK, "Lemma5.5(AK)"},  {Tag::Lemma5_6_AK, "Lemma5.6(AK)"},
    {Tag::Lemma5_7_tor, "Lemma5.7(tor)"}, {Tag::Fermat, "Fermat"},
    {Tag::Arithmetic, "arithmetic"},     {Tag::Diagram, "Diagram"},
    {Tag::Table, "Table"},
};

json integer_to_json(const nt::Integer& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return nt::to_string(v);
}

nt::Integer integer_from_json(const json& j) {
    if (j.is_string()) return nt::Integer(j.get<std::string>());
    if (j.is_number_unsigned()) return nt::Integer(j.get<std::uint64_t>());
    if (j.is_number_integer()) return nt::Integer(j.get<std::int64_t>());
    throw std::invalid_argument("certificate: bad integer " + j.dump());
}

json labels_to_json(const VertexList& vs) {
    json out = json::array();
    for (const auto& v : vs) out.push_back(label_to_json(v));
    return out;
}

VertexList labels_from_json(const json& j) {
    VertexList out;
    for (const auto& v : j) out.push_back(label_from_json(v));
    return out;
}

}  // namespace

std::string to_string(Tag t) {
    for (const auto& [tag, name] : kTagNames)
        if (tag == t) return name;
    return "?";
}

std::optional<Tag> tag_from_string(const std::string& s) {
    for (const auto& [tag, name] : kTagNames)
        if (s == name) return tag;
    return std::nullopt;
}

std::string to_string(Certificate::Kind k) {
    switch (k) {
        case Certificate::Kind::Split: return "SplitCert";
        case Certificate::Kind::NonSplit: return "NonSplitCert";
        case Certificate::Kind::LemmaChain: return "LemmaChain";
    }
    return "?";
}

Fact fact(std::string op, std::initializer_list<nt::Integer> args, std::string note) {
    return Fact{std::move(op), std::vector<nt::Integer>(args), std::move(note)};
}

Claim& Certificate::add(std::string statement, Tag tag, bool assumption) {
    claims.push_back(Claim{std::move(statement), tag, assumption, {}});
    return claims.back();
}

void Certificate::append(const Certificate& other) {
    claims.insert(claims.end(), other.claims.begin(), other.claims.end());
}

std::size_t Certificate::fact_count() const {
    std::size_t n = 0;
    for (const auto& c : claims) n += c.facts.size();
    return n;
}

std::size_t Certificate::assumption_count() const {
    std::size_t n = 0;
    for (const auto& c : claims) n += c.assumption ? 1 : 0;
    return n;
}

json certificate_to_json(const Certificate& c) {
    json j;
    j["schema"] = kCertificateSchema;
    j["kind"] = to_string(c.kind);
    j["subject"] = c.subject;
    if (c.graph) j["graph"] = graph_to_json(*c.graph);
    if (c.partition)
        j["partition"] = {{"C", labels_to_json(c.partition->C)},
                          {"I", labels_to_json(c.partition->I)},
                          {"special", c.partition->special}};
    if (c.witness) j["witness"] = {{"kind", to_string(c.witness->kind)}, {"vertices", labels_to_json(c.witness->vertices)}};
    json claims = json::array(), assumptions = json::array();
    for (const auto& cl : c.claims) {
        json facts = json::array();
        for (const auto& f : cl.facts) {
            json args = json::array();
            for (const auto& a : f.args) args.push_back(integer_to_json(a));
            json fj = {{"op", f.op}, {"args", args}};
            if (!f.note.empty()) fj["note"] = f.note;
            facts.push_back(fj);
        }
        json cj = {{"statement", cl.statement}, {"tag", to_string(cl.tag)}, {"facts", facts}};
        (cl.assumption ? assumptions : claims).push_back(cj);
    }
    j["claims"] = claims;
    j["assumptions"] = assumptions;
    return j;
}

Certificate certificate_from_json(const json& j) {
    if (j.value("schema", "") != kCertificateSchema) throw std::invalid_argument("certificate: unsupported schema");
    Certificate c;
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "SplitCert")
        c.kind = Certificate::Kind::Split;
    else if (kind == "NonSplitCert")
        c.kind = Certificate::Kind::NonSplit;
    else if (kind == "LemmaChain")
        c.kind = Certificate::Kind::LemmaChain;
    else
        throw std::invalid_argument("certificate: unknown kind " + kind);
    c.subject = j.value("subject", "");
    if (j.contains("graph")) c.graph = graph_from_json(j.at("graph"));
    if (j.contains("partition")) {
        const auto& p = j.at("partition");
        c.partition = SplitPartition{labels_from_json(p.at("C")), labels_from_json(p.at("I")), p.value("special", false)};
    }
    if (j.contains("witness")) {
        const auto& w = j.at("witness");
        auto k = forbidden_kind_from_string(w.at("kind").get<std::string>());
        if (!k) throw std::invalid_argument("certificate: unknown witness kind");
        c.witness = ForbiddenWitness{*k, labels_from_json(w.at("vertices"))};
    }
    for (const char* section : {"claims", "assumptions"}) {
        if (!j.contains(section)) continue;
        for (const auto& cj : j.at(section)) {
            Claim cl;
            cl.statement = cj.at("statement").get<std::string>();
            auto tag = tag_from_string(cj.at("tag").get<std::string>());
            if (!tag) throw std::invalid_argument("certificate: unknown tag " + cj.at("tag").dump());
            cl.tag = *tag;
            cl.assumption = std::string(section) == "assumptions";
            for (const auto& fj : cj.at("facts")) {
                Fact f;
                f.op = fj.at("op").get<std::string>();
                for (const auto& a : fj.at("args")) f.args.push_back(integer_from_json(a));
                f.note = fj.value("note", "");
                cl.facts.push_back(std::move(f));
            }
            c.claims.push_back(std::move(cl));
        }
    }
    return c;
}

PartitionCheck check_structure(const Certificate& c) {
    if (!c.graph) return {};
    if (c.partition)
        if (auto r = validate_partition(*c.graph, *c.partition); !r) return r;
    if (c.witness && !witness_holds(*c.graph, *c.witness))
        return {false, "witness does not induce " + to_string(c.witness->kind)};
    return {};
}

}  // namespace gkc
