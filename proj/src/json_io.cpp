#include "grcup/json_io.hpp"

#include <stdexcept>

namespace grcup {

nlohmann::ordered_json poly_to_json(const Polynomial& f) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const Monomial& t : f.terms()) arr.push_back({t.p, t.q});
    return arr;
}

Polynomial poly_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw std::invalid_argument("polynomial must be an array of [p,q] pairs");
    std::vector<Monomial> terms;
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            throw std::invalid_argument("malformed monomial entry");
        const Monomial m{e[0].get<std::int64_t>(), e[1].get<std::int64_t>()};
        if (m.p < 0 || m.q < 0) throw std::invalid_argument("negative exponent");
        if (!terms.empty() && !(m < terms.back()))
            throw std::invalid_argument("terms must be strictly descending");
        terms.push_back(m);
    }
    return Polynomial::from_terms(std::move(terms));
}

nlohmann::ordered_json polys_to_json(std::span<const Polynomial> polys) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const Polynomial& p : polys) arr.push_back(poly_to_json(p));
    return arr;
}

std::vector<Polynomial> polys_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw std::invalid_argument("expected an array of polynomials");
    std::vector<Polynomial> out;
    for (const auto& e : j) out.push_back(poly_from_json(e));
    return out;
}

}  // namespace grcup
