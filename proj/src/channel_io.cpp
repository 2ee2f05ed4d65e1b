#include "avckit/channel_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace avckit {

using nlohmann::json;

StateChannel parse_channel_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("channel file: ") + e.what());
    }
    StateChannel ch;
    try {
        ch.nx = doc.at("nx").get<int>();
        ch.ns = doc.at("ns").get<int>();
        ch.nj = doc.at("nj").get<int>();
        ch.ny = doc.at("ny").get<int>();
        ch.ns_hat = doc.at("ns_hat").get<int>();
        const auto& w = doc.at("W");
        ch.w.reserve(static_cast<std::size_t>(ch.nx) * ch.ns * ch.nj * ch.ny);
        if (static_cast<int>(w.size()) != ch.nx) throw DimensionMismatch("W: outer size != nx");
        for (int x = 0; x < ch.nx; ++x) {
            if (static_cast<int>(w[x].size()) != ch.ns) throw DimensionMismatch("W: state size != ns");
            for (int s = 0; s < ch.ns; ++s) {
                if (static_cast<int>(w[x][s].size()) != ch.nj)
                    throw DimensionMismatch("W: jammer size != nj");
                for (int j = 0; j < ch.nj; ++j) {
                    if (static_cast<int>(w[x][s][j].size()) != ch.ny)
                        throw DimensionMismatch("W: output size != ny");
                    for (int y = 0; y < ch.ny; ++y) ch.w.push_back(w[x][s][j][y].get<double>());
                }
            }
        }
        for (const auto& v : doc.at("Qs")) ch.q_s.push_back(v.get<double>());
        for (const auto& row : doc.at("distortion"))
            for (const auto& v : row) ch.distortion.push_back(v.get<double>());
    } catch (const json::exception& e) {
        throw ParseError(std::string("channel file: ") + e.what());
    }
    return validate_channel(std::move(ch), 1e-9);
}

StateChannel load_channel_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open channel file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_channel_json(ss.str());
}

std::string channel_to_json(const StateChannel& ch) {
    json doc;
    doc["nx"] = ch.nx;
    doc["ns"] = ch.ns;
    doc["nj"] = ch.nj;
    doc["ny"] = ch.ny;
    doc["ns_hat"] = ch.ns_hat;
    json w = json::array();
    for (int x = 0; x < ch.nx; ++x) {
        json ws = json::array();
        for (int s = 0; s < ch.ns; ++s) {
            json wj = json::array();
            for (int j = 0; j < ch.nj; ++j) {
                json wy = json::array();
                for (int y = 0; y < ch.ny; ++y) wy.push_back(ch.wp(x, s, j, y));
                wj.push_back(wy);
            }
            ws.push_back(wj);
        }
        w.push_back(ws);
    }
    doc["W"] = w;
    doc["Qs"] = ch.q_s;
    json d = json::array();
    for (int s = 0; s < ch.ns; ++s) {
        json row = json::array();
        for (int sh = 0; sh < ch.ns_hat; ++sh) row.push_back(ch.d(s, sh));
        d.push_back(row);
    }
    doc["distortion"] = d;
    return doc.dump(2);
}

}  // namespace avckit
