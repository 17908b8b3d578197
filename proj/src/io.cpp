#include "hopfexp/io.hpp"

#include <algorithm>
#include <sstream>

namespace hopfexp {

FieldElement parse_scalar(const json& j, const FieldDescriptor& f) {
    try {
        if (j.is_array()) {
            std::vector<std::string> coords;
            for (const auto& c : j) {
                if (!c.is_string()) throw Error(Errc::MalformedLiteral, "coordinate must be a string");
                coords.push_back(c.get<std::string>());
            }
            return FieldElement::parse_power_basis(f, coords);
        }
        if (j.is_string()) return FieldElement::parse_literal(f, j.get<std::string>());
        if (j.is_number_integer())
            return FieldElement::from_integer(f, mpz_class(static_cast<long>(j.get<long long>())));
    } catch (const Error&) {
        throw;
    }
    throw Error(Errc::MalformedLiteral, "unsupported scalar encoding: " + j.dump());
}

json serialize_scalar(const FieldElement& e) {
    if (e.descriptor().kind == FieldKind::Cyclotomic) {
        json arr = json::array();
        for (const auto& s : e.power_basis_literals()) arr.push_back(s);
        return arr;
    }
    return e.to_literal();
}

FieldDescriptor field_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind"))
        throw Error(Errc::ParseError, "field descriptor must be an object with a kind");
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "rational") return FieldDescriptor::rational();
    if (kind == "cyclotomic") return FieldDescriptor::cyclotomic(j.at("n").get<std::int64_t>());
    if (kind == "prime") return FieldDescriptor::prime_field(j.at("p").get<std::int64_t>());
    throw Error(Errc::ParseError, "unknown field kind: " + kind);
}

json field_to_json(const FieldDescriptor& f) {
    json j = json::object();
    switch (f.kind) {
        case FieldKind::Rational: j["kind"] = "rational"; break;
        case FieldKind::Cyclotomic:
            j["kind"] = "cyclotomic";
            j["n"] = f.param;
            break;
        case FieldKind::PrimeField:
            j["kind"] = "prime";
            j["p"] = f.param;
            break;
    }
    return j;
}

FieldDescriptor field_from_spec_string(const std::string& s) {
    if (s == "rational" || s == "q" || s == "Q") return FieldDescriptor::rational();
    auto colon = s.find(':');
    if (colon != std::string::npos) {
        std::string kind = s.substr(0, colon);
        std::int64_t param = 0;
        try {
            param = std::stoll(s.substr(colon + 1));
        } catch (...) {
            throw Error(Errc::UsageError, "bad field parameter in: " + s);
        }
        if (kind == "cyclotomic") return FieldDescriptor::cyclotomic(param);
        if (kind == "prime") return FieldDescriptor::prime_field(param);
    }
    throw Error(Errc::UsageError, "unknown field spec: " + s + " (rational | cyclotomic:N | prime:P)");
}

AlgebraDocument document_from_algebra(const HopfAlgebra& h, json metadata) {
    AlgebraDocument doc;
    doc.field = h.field;
    doc.dim = static_cast<std::int64_t>(h.dim);
    doc.basis = h.basis_names;
    for (std::size_t i = 0; i < h.dim; ++i)
        for (std::size_t j = 0; j < h.dim; ++j)
            for (std::size_t k = 0; k < h.dim; ++k) {
                if (!h.mult_at(i, j, k).is_zero())
                    doc.mult.emplace_back(i, j, k, h.mult_at(i, j, k));
                if (!h.comult_at(i, j, k).is_zero())
                    doc.comult.emplace_back(i, j, k, h.comult_at(i, j, k));
            }
    doc.unit = h.unit;
    doc.counit = h.counit;
    if (h.has_antipode()) doc.antipode = h.antipode;
    doc.metadata = std::move(metadata);
    return doc;
}

HopfAlgebra algebra_from_document(const AlgebraDocument& doc) {
    if (doc.dim < 1) throw Error(Errc::ParseError, "dimension must be positive");
    HopfAlgebra h(doc.field, static_cast<std::size_t>(doc.dim));
    if (!doc.basis.empty()) {
        if (static_cast<std::int64_t>(doc.basis.size()) != doc.dim)
            throw Error(Errc::ParseError, "basis name count differs from dim");
        h.basis_names = doc.basis;
    }
    auto put = [&](std::vector<FieldElement>& tensor, const auto& triples) {
        for (const auto& [i, j, k, c] : triples) {
            if (i < 0 || i >= doc.dim || j < 0 || j >= doc.dim || k < 0 || k >= doc.dim)
                throw Error(Errc::ParseError, "sparse triple index out of range");
            tensor[(static_cast<std::size_t>(i) * h.dim + static_cast<std::size_t>(j)) * h.dim +
                   static_cast<std::size_t>(k)] = c;
        }
    };
    put(h.mult, doc.mult);
    put(h.comult, doc.comult);
    if (doc.unit.size() != h.dim || doc.counit.size() != h.dim)
        throw Error(Errc::ParseError, "unit/counit length differs from dim");
    h.unit = doc.unit;
    h.counit = doc.counit;
    h.finalize();
    if (doc.antipode) {
        if (doc.antipode->rows() != h.dim || doc.antipode->cols() != h.dim)
            throw Error(Errc::ParseError, "antipode shape differs from dim");
        h.antipode = *doc.antipode;
    } else {
        h.antipode = derive_antipode(h);
    }
    h.antipode_inverse = inverse(h.antipode);
    h.finalize();
    AxiomReport rep = verify_axioms(h);
    if (!rep.all_pass())
        throw Error(Errc::AxiomViolation, "document fails the axiom gate\n" + rep.summary());
    return h;
}

json document_to_json(const AlgebraDocument& doc) {
    json j = json::object();
    j["format_version"] = doc.format_version;
    j["field"] = field_to_json(doc.field);
    j["dim"] = doc.dim;
    j["basis"] = doc.basis;
    auto triples = [](const auto& list) {
        auto sorted = list;
        std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
            return std::tie(std::get<0>(a), std::get<1>(a), std::get<2>(a)) <
                   std::tie(std::get<0>(b), std::get<1>(b), std::get<2>(b));
        });
        json out = json::array();
        for (const auto& [i, jj, k, c] : sorted)
            out.push_back(json::array({i, jj, k, serialize_scalar(c)}));
        return out;
    };
    j["mult"] = triples(doc.mult);
    j["comult"] = triples(doc.comult);
    json unit = json::array(), counit = json::array();
    for (const auto& c : doc.unit) unit.push_back(serialize_scalar(c));
    for (const auto& c : doc.counit) counit.push_back(serialize_scalar(c));
    j["unit"] = unit;
    j["counit"] = counit;
    if (doc.antipode) {
        json rows = json::array();
        for (std::size_t r = 0; r < doc.antipode->rows(); ++r) {
            json row = json::array();
            for (std::size_t c = 0; c < doc.antipode->cols(); ++c)
                row.push_back(serialize_scalar(doc.antipode->at(r, c)));
            rows.push_back(row);
        }
        j["antipode"] = rows;
    }
    j["metadata"] = doc.metadata;
    return j;
}

AlgebraDocument document_from_json(const json& j) {
    try {
        AlgebraDocument doc;
        if (!j.is_object()) throw Error(Errc::ParseError, "document must be a JSON object");
        doc.format_version = j.value("format_version", 1);
        if (doc.format_version != 1)
            throw Error(Errc::ParseError,
                        "unsupported format_version " + std::to_string(doc.format_version));
        doc.field = field_from_json(j.at("field"));
        doc.dim = j.at("dim").get<std::int64_t>();
        if (j.contains("basis")) doc.basis = j.at("basis").get<std::vector<std::string>>();
        auto triples = [&](const json& arr) {
            std::vector<std::tuple<std::int64_t, std::int64_t, std::int64_t, FieldElement>> out;
            for (const auto& t : arr) {
                if (!t.is_array() || t.size() != 4)
                    throw Error(Errc::ParseError, "sparse entry must be [i, j, k, scalar]");
                out.emplace_back(t[0].get<std::int64_t>(), t[1].get<std::int64_t>(),
                                 t[2].get<std::int64_t>(), parse_scalar(t[3], doc.field));
            }
            return out;
        };
        doc.mult = triples(j.at("mult"));
        doc.comult = triples(j.at("comult"));
        for (const auto& c : j.at("unit")) doc.unit.push_back(parse_scalar(c, doc.field));
        for (const auto& c : j.at("counit")) doc.counit.push_back(parse_scalar(c, doc.field));
        if (j.contains("antipode") && !j.at("antipode").is_null()) {
            const json& rows = j.at("antipode");
            Matrix s(doc.field, rows.size(), rows.empty() ? 0 : rows[0].size());
            for (std::size_t r = 0; r < rows.size(); ++r)
                for (std::size_t c = 0; c < rows[r].size(); ++c)
                    s.at(r, c) = parse_scalar(rows[r][c], doc.field);
            doc.antipode = std::move(s);
        }
        if (j.contains("metadata")) doc.metadata = j.at("metadata");
        return doc;
    } catch (const json::exception& e) {
        throw Error(Errc::ParseError, std::string("document parse error: ") + e.what());
    }
}

std::string canonical_serialize(const AlgebraDocument& doc) {
    return document_to_json(doc).dump(2) + "\n";
}

std::string document_digest(const AlgebraDocument& doc) {
    return sha256_hex(canonical_serialize(doc));
}

void save_document(const AlgebraDocument& doc, const std::string& path) {
    atomic_write_file(path, canonical_serialize(doc));
}

AlgebraDocument load_document(const std::string& path) {
    json j;
    try {
        j = json::parse(read_file(path));
    } catch (const json::exception& e) {
        throw Error(Errc::ParseError, std::string("invalid JSON in ") + path + ": " + e.what());
    }
    return document_from_json(j);
}

HopfAlgebra load_algebra(const std::string& path) {
    return algebra_from_document(load_document(path));
}

json twist_to_json(const HopfAlgebra& h, const TensorElem& j_elem, const TensorElem& j_inverse) {
    json out = json::object();
    out["format_version"] = 1;
    auto dense = [&](const TensorElem& t) {
        json arr = json::array();
        Vec v = vec_zero(h.field, h.dim * h.dim);
        for (const auto& [idx, c] : t.terms) v[static_cast<std::size_t>(idx)] = c;
        for (const auto& c : v) arr.push_back(serialize_scalar(c));
        return arr;
    };
    out["j"] = dense(j_elem);
    out["j_inverse"] = dense(j_inverse);
    return out;
}

std::pair<Vec, Vec> twist_from_json(const HopfAlgebra& h, const json& doc) {
    try {
        Vec j, ji;
        for (const auto& c : doc.at("j")) j.push_back(parse_scalar(c, h.field));
        for (const auto& c : doc.at("j_inverse")) ji.push_back(parse_scalar(c, h.field));
        if (j.size() != h.dim * h.dim || ji.size() != h.dim * h.dim)
            throw Error(Errc::ParseError, "twist coordinate lists must have length dim^2");
        return {std::move(j), std::move(ji)};
    } catch (const json::exception& e) {
        throw Error(Errc::ParseError, std::string("twist parse error: ") + e.what());
    }
}

bool VerificationReport::all_passed() const {
    for (const auto& c : checks)
        if (c.status == "fail") return false;
    return true;
}

json VerificationReport::to_json() const {
    json j = json::object();
    j["format_version"] = format_version;
    j["subject"] = subject_digest;
    json arr = json::array();
    for (const auto& c : checks) {
        json e = json::object();
        e["name"] = c.name;
        e["anchor"] = c.anchor;
        e["status"] = c.status;
        e["witness"] = c.witness;
        arr.push_back(e);
    }
    j["checks"] = arr;
    json exps = json::object();
    for (const auto& [i, s] : exponents) exps[std::to_string(i)] = s;
    j["exponents"] = exps;
    return j;
}

VerificationReport VerificationReport::from_json(const json& j) {
    try {
        VerificationReport rep;
        rep.format_version = j.at("format_version").get<int>();
        rep.subject_digest = j.at("subject").get<std::string>();
        for (const auto& e : j.at("checks"))
            rep.checks.push_back({e.at("name").get<std::string>(), e.at("anchor").get<std::string>(),
                                  e.at("status").get<std::string>(),
                                  e.at("witness").get<std::string>()});
        for (const auto& [k, v] : j.at("exponents").items())
            rep.exponents.emplace_back(std::stoll(k), v.get<std::string>());
        return rep;
    } catch (const json::exception& e) {
        throw Error(Errc::ParseError, std::string("report parse error: ") + e.what());
    }
}

std::string VerificationReport::to_text() const {
    std::ostringstream ss;
    ss << "subject " << subject_digest.substr(0, 12) << "\n";
    for (const auto& c : checks) {
        ss << "  [" << c.status << "] " << c.name;
        if (!c.anchor.empty()) ss << "  {" << c.anchor << "}";
        if (!c.witness.empty() && c.status != "pass") ss << "  witness: " << c.witness;
        ss << "\n";
    }
    for (const auto& [i, s] : exponents) ss << "  exp_{2*(" << i << ")}: " << s << "\n";
    return ss.str();
}

}  // namespace hopfexp
