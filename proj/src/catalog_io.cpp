#include "mkp/catalog_io.hpp"

#include "json.hpp"
#include "mkp/planar_map.hpp"

namespace mkp {

std::string hex_key(const std::string& raw) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(raw.size() * 2);
    for (unsigned char c : raw) {
        out.push_back(digits[c >> 4]);
        out.push_back(digits[c & 0xf]);
    }
    return out;
}

std::string catalog_to_json(const DrawingCatalog& cat) {
    nlohmann::ordered_json j;
    j["manifest"]["n"] = cat.n;
    j["manifest"]["mode"] = cat.mode;
    j["manifest"]["count"] = cat.count();
    j["manifest"]["keys"] = nlohmann::ordered_json::array();
    j["drawings"] = nlohmann::ordered_json::array();
    for (const auto& [key, d] : cat.entries) {
        j["manifest"]["keys"].push_back(hex_key(key));
        j["drawings"].push_back(nlohmann::ordered_json::parse(drawing_to_json(d)));
    }
    return j.dump(2);
}

DrawingCatalog catalog_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    DrawingCatalog cat;
    cat.n = j.at("manifest").at("n").get<int>();
    cat.mode = j.at("manifest").at("mode").get<std::string>();
    for (const auto& dj : j.at("drawings")) {
        Drawing d = drawing_from_json(dj.dump());
        std::string key = cat.mode == "weak-iso" ? canonical_key_weak_iso(d) : canonical_key_iso(d);
        cat.entries.emplace(std::move(key), std::move(d));
    }
    return cat;
}

}  // namespace mkp
