#include <json.hpp>

#include "hecke/errors.hpp"
#include "hecke/poly_matrix.hpp"

namespace hecke {

using nlohmann::json;

std::string to_json(const PolyMatrix& m) {
    json entries = json::array();
    for (int r = 0; r < m.dim(); ++r) {
        for (const auto& e : m.row(r)) {
            json terms = json::array();
            e.value.for_each_term([&](int d, const Rational& c) {
                terms.push_back(json::array({d, c.numerator(), c.denominator()}));
            });
            entries.push_back(json::array({r, e.col, std::move(terms)}));
        }
    }
    json doc = {{"dim", m.dim()}, {"layout", m.layout()}, {"entries", std::move(entries)}};
    return doc.dump();
}

PolyMatrix matrix_from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
        auto layout = doc.at("layout").get<Layout>();
        PolyMatrix m(layout);
        if (m.dim() != doc.at("dim").get<int>()) throw ParseError("matrix dump: dim disagrees with layout");
        for (const auto& entry : doc.at("entries")) {
            LaurentPoly p;
            for (const auto& t : entry.at(2)) {
                const Rational c = Rational::parse(t.at(1).get<std::string>() + "/" + t.at(2).get<std::string>());
                p += LaurentPoly::monomial(c, t.at(0).get<int>());
            }
            m.set(entry.at(0).get<int>(), entry.at(1).get<int>(), std::move(p));
        }
        return m;
    } catch (const json::exception& ex) {
        throw ParseError(std::string("matrix dump: ") + ex.what());
    }
}

}  // namespace hecke
