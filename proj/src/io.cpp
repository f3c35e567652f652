#include "apollonian/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace apollonian::io {

using nlohmann::json;

namespace {

json rational_to_json(const Rational& q) {
    if (is_integer(q) && q.get_num().fits_slong_p())
        return json(q.get_num().get_si());
    return json(to_string(q));
}

Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw std::invalid_argument("rational must be an integer or a p/q string");
}

}  // namespace

std::string config_to_json(const Mat4Q& w) {
    json rows = json::array();
    for (int i = 0; i < 4; ++i) {
        json row = json::array();
        for (int j = 0; j < 4; ++j) row.push_back(rational_to_json(w(i, j)));
        rows.push_back(row);
    }
    json out{{"rows", rows}};
    return out.dump(2) + "\n";
}

Mat4Q config_from_json(const std::string& text) {
    json j = json::parse(text);
    if (!j.contains("rows") || !j["rows"].is_array() || j["rows"].size() != 4)
        throw std::invalid_argument("config needs a 4-row \"rows\" array");
    Mat4Q w;
    for (int i = 0; i < 4; ++i) {
        const json& row = j["rows"][i];
        if (!row.is_array() || row.size() != 4)
            throw std::invalid_argument("each row needs 4 entries");
        for (int k = 0; k < 4; ++k) w(i, k) = rational_from_json(row[k]);
    }
    return w;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

Mat4Q load_config(const std::string& path) { return config_from_json(read_file(path)); }

void save_config(const Mat4Q& w, const std::string& path) {
    write_file(path, config_to_json(w));
}

std::string packing_to_json(const packing::Packing& p) {
    json circles = json::array();
    for (const auto& [key, rec] : p.circles) {
        json c{{"key", key},
               {"bbar", rational_to_json(rec.row[0])},
               {"b", rational_to_json(rec.row[1])},
               {"w1", rational_to_json(rec.row[2])},
               {"w2", rational_to_json(rec.row[3])},
               {"word", rec.word},
               {"level", rec.level}};
        circles.push_back(c);
    }
    json seed = json::parse(config_to_json(p.seed));
    json out{{"seed", seed},
             {"kind", packing::kind_name(p.kind)},
             {"depth", p.depth},
             {"seed_negated", p.seed_negated},
             {"circles", circles}};
    return out.dump(2) + "\n";
}

packing::Packing packing_from_json(const std::string& text) {
    json j = json::parse(text);
    packing::Packing p;
    p.seed = config_from_json(j.at("seed").dump());
    p.kind = packing::kind_from_name(j.at("kind").get<std::string>());
    p.depth = j.at("depth").get<int>();
    p.seed_negated = j.value("seed_negated", false);
    p.new_circles_per_level.assign(p.depth + 1, 0);
    for (const json& c : j.at("circles")) {
        packing::CircleRecord rec;
        rec.row = {rational_from_json(c.at("bbar")), rational_from_json(c.at("b")),
                   rational_from_json(c.at("w1")), rational_from_json(c.at("w2"))};
        rec.word = c.at("word").get<std::string>();
        rec.level = c.at("level").get<int>();
        std::string key = c.at("key").get<std::string>();
        if (key != packing::canonical_circle_key(rec.row))
            throw std::invalid_argument("circle key does not match its row");
        p.circles.emplace(key, rec);
        if (rec.level >= 0 && rec.level <= p.depth) ++p.new_circles_per_level[rec.level];
    }
    return p;
}

packing::Packing load_packing(const std::string& path) {
    return packing_from_json(read_file(path));
}

void save_packing(const packing::Packing& p, const std::string& path) {
    write_file(path, packing_to_json(p));
}

std::string spectrum_to_csv(const packing::Packing& p) {
    std::string out = "curvature,count\n";
    for (const auto& [b, count] : packing::curvature_spectrum(p))
        out += to_string(b) + "," + std::to_string(count) + "\n";
    return out;
}

std::string points_to_csv(const std::vector<std::complex<double>>& points,
                          const std::vector<std::string>& words) {
    std::ostringstream ss;
    ss.precision(15);
    ss << "re,im,word\n";
    for (std::size_t i = 0; i < points.size(); ++i)
        ss << points[i].real() << "," << points[i].imag() << ","
           << (i < words.size() ? words[i] : "") << "\n";
    return ss.str();
}

}  // namespace apollonian::io
