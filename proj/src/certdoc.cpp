#include "ncgb/certdoc.hpp"

#include <json.hpp>

namespace ncgb {

using json = nlohmann::ordered_json;

std::string CertificateDocument::serialize(const Algebra& alg) const {
    json doc;
    doc["tool"] = tool;
    doc["version"] = version;
    doc["status"] = status;
    doc["iterations"] = iterations;
    doc["timing_ms"] = timing_ms;
    doc["claims"] = json::array();
    for (std::size_t i = 0; i < claims.size(); ++i) {
        json claim;
        claim["claim"] = claims[i];
        claim["integer_clean"] = i < integer_clean.size() ? (bool)integer_clean[i] : true;
        json cert = json::array();
        if (i < certificates.size()) {
            for (const auto& t : certificates[i].triples()) {
                json rec;
                rec["left_coeff"] = t.left.coeff.str();
                json lw = json::array();
                for (VarIndex v : t.left.word.letters) lw.push_back(alg.name(v));
                rec["left_word"] = lw;
                rec["gen_index"] = t.gen;
                rec["right_coeff"] = t.right.coeff.str();
                json rw = json::array();
                for (VarIndex v : t.right.word.letters) rw.push_back(alg.name(v));
                rec["right_word"] = rw;
                cert.push_back(rec);
            }
        }
        claim["certificate"] = cert;
        doc["claims"].push_back(claim);
    }
    return doc.dump(2) + "\n";
}

CertificateDocument CertificateDocument::parse(const std::string& text, const AlgebraPtr& alg) {
    json doc = json::parse(text);
    CertificateDocument out;
    out.tool = doc.value("tool", "");
    out.version = doc.value("version", "");
    out.status = doc.value("status", "");
    out.iterations = doc.value("iterations", 0);
    out.timing_ms = doc.value("timing_ms", 0.0);
    if (!doc.contains("claims")) return out;
    for (const auto& claim : doc["claims"]) {
        out.claims.push_back(claim.value("claim", ""));
        out.integer_clean.push_back(claim.value("integer_clean", true));
        Certificate cert;
        for (const auto& rec : claim["certificate"]) {
            Word lw, rw;
            for (const auto& n : rec["left_word"]) lw.letters.push_back(alg->require(n.get<std::string>()));
            for (const auto& n : rec["right_word"]) rw.letters.push_back(alg->require(n.get<std::string>()));
            std::uint32_t gen = rec["gen_index"].get<std::uint32_t>();
            Term left(Rational::from_string(rec["left_coeff"].get<std::string>()), std::move(lw));
            Term right(Rational::from_string(rec["right_coeff"].get<std::string>()), std::move(rw));
            cert.add(std::move(left), gen, std::move(right));
        }
        out.certificates.push_back(std::move(cert));
    }
    return out;
}

}  // namespace ncgb
