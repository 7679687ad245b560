#include <fstream>
#include <sstream>

#include <json.hpp>

#include "modcount/hiprec.hpp"

namespace modcount::hiprec {

ProductSpec parse_product_spec(const std::string& json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw invalid_input(std::string("product spec: invalid JSON: ") + e.what());
    }
    ProductSpec spec;
    try {
        auto cls = doc.at("class");
        spec.cls.k = cls.at(0).get<int>();
        spec.cls.l = cls.at(1).get<int>();
        if (!(spec.cls.k == 1 && spec.cls.l == 0) &&
            !(spec.cls.k == 3 && (spec.cls.l == 1 || spec.cls.l == 2)))
            throw invalid_input("product spec: class must be [1,0], [3,1] or [3,2]");
        for (const auto& fj : doc.at("factors")) {
            ProductFactor f;
            for (const auto& coef : fj.at("poly"))
                f.poly.push_back(Rat::from_string(coef.get<std::string>()));
            f.exponent = Rat::from_string(fj.at("exponent").get<std::string>());
            if (f.poly.empty() || f.poly[0] != Rat(1))
                throw invalid_input("product spec: polynomial constant term must be 1");
            spec.factors.push_back(std::move(f));
        }
    } catch (const nlohmann::json::exception& e) {
        throw invalid_input(std::string("product spec: missing or malformed field: ") + e.what());
    }
    return spec;
}

ProductSpec load_product_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw invalid_input("product spec: cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_product_spec(buf.str());
}

}  // namespace modcount::hiprec
