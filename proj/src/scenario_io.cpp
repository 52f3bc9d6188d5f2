#include "misched/scenario_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace misched {

namespace {

std::vector<double> parse_doubles(std::istringstream& in, int line_no) {
    std::vector<double> out;
    double v;
    while (in >> v) out.push_back(v);
    if (out.empty())
        throw std::invalid_argument("line " + std::to_string(line_no) + ": expected numbers");
    return out;
}

std::string fmt9(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

} // namespace

NetworkScenario parse_scenario(std::istream& in) {
    NetworkScenario sc;
    sc.delta = 0.0;
    std::vector<Vec3> bs, ue;
    std::vector<CellKind> kinds;
    int declared_cells = -1;

    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key)) continue;

        auto fail = [&](const std::string& msg) {
            throw std::invalid_argument("line " + std::to_string(line_no) + ": " + msg);
        };

        if (key == "name") {
            ls >> sc.name;
        } else if (key == "criterion") {
            std::string kind;
            if (!(ls >> kind)) fail("criterion kind missing");
            if (kind == "max_min") {
                sc.criterion = Criterion::max_min();
            } else if (kind == "weighted_sum") {
                std::vector<double> w;
                double v;
                while (ls >> v) w.push_back(v);
                sc.criterion = Criterion::weighted_sum(std::move(w));
            } else {
                fail("unknown criterion '" + kind + "'");
            }
        } else if (key == "delta") {
            if (!(ls >> sc.delta)) fail("delta value missing");
        } else if (key == "np") {
            if (!(ls >> sc.np)) fail("np value missing");
        } else if (key == "wall_attenuation") {
            double v;
            if (!(ls >> v)) fail("wall_attenuation value missing");
            sc.wall_attenuation = v;
        } else if (key == "power_levels") {
            if (!(ls >> sc.power_levels)) fail("power_levels value missing");
        } else if (key == "cells") {
            if (!(ls >> declared_cells)) fail("cell count missing");
        } else if (key == "p_max") {
            sc.p_max = parse_doubles(ls, line_no);
        } else if (key == "sigma2") {
            sc.sigma2 = parse_doubles(ls, line_no);
        } else if (key == "r_min") {
            sc.r_min = parse_doubles(ls, line_no);
        } else if (key == "bs" || key == "ue") {
            Vec3 v;
            if (!(ls >> v.x >> v.y >> v.z)) fail("expected three coordinates");
            (key == "bs" ? bs : ue).push_back(v);
        } else if (key == "kind") {
            std::string k;
            while (ls >> k) {
                if (k == "femto") kinds.push_back(CellKind::Femto);
                else if (k == "macro") kinds.push_back(CellKind::Macro);
                else fail("unknown cell kind '" + k + "'");
            }
        } else if (key == "gain_row") {
            sc.explicit_gains.push_back(parse_doubles(ls, line_no));
        } else if (key == "wall_row") {
            std::vector<int> row;
            int v;
            while (ls >> v) row.push_back(v);
            if (row.empty()) fail("expected wall counts");
            sc.walls.push_back(std::move(row));
        } else if (key == "edge") {
            int u, v;
            if (!(ls >> u >> v)) fail("expected two endpoints");
            sc.explicit_edges.emplace_back(u, v);
        } else {
            fail("unknown key '" + key + "'");
        }
    }

    if (!bs.empty() || !ue.empty()) {
        if (bs.size() != ue.size())
            throw std::invalid_argument("bs and ue line counts differ");
        sc.cells.resize(bs.size());
        for (std::size_t i = 0; i < bs.size(); ++i) {
            sc.cells[i].bs = bs[i];
            sc.cells[i].ue = ue[i];
            if (i < kinds.size()) sc.cells[i].kind = kinds[i];
        }
    }
    if (declared_cells >= 0 && declared_cells != sc.n())
        throw std::invalid_argument("declared cell count does not match p_max length");
    sc.validate();
    return sc;
}

NetworkScenario parse_scenario_string(const std::string& text) {
    std::istringstream in(text);
    return parse_scenario(in);
}

NetworkScenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open scenario file: " + path);
    return parse_scenario(in);
}

std::string write_scenario(const NetworkScenario& sc) {
    std::ostringstream os;
    os << "name " << (sc.name.empty() ? "scenario" : sc.name) << '\n';
    os << "cells " << sc.n() << '\n';
    if (sc.criterion.kind == CriterionKind::MaxMin) {
        os << "criterion max_min\n";
    } else {
        os << "criterion weighted_sum";
        for (double w : sc.criterion.weights) os << ' ' << fmt9(w);
        os << '\n';
    }
    os << "delta " << fmt9(sc.delta) << '\n';
    os << "np " << fmt9(sc.np) << '\n';
    if (sc.wall_attenuation) os << "wall_attenuation " << fmt9(*sc.wall_attenuation) << '\n';
    os << "power_levels " << sc.power_levels << '\n';
    auto arr = [&](const char* key, const std::vector<double>& v) {
        os << key;
        for (double x : v) os << ' ' << fmt9(x);
        os << '\n';
    };
    arr("p_max", sc.p_max);
    arr("sigma2", sc.sigma2);
    arr("r_min", sc.r_min);
    for (const auto& c : sc.cells)
        os << "bs " << fmt9(c.bs.x) << ' ' << fmt9(c.bs.y) << ' ' << fmt9(c.bs.z) << '\n';
    for (const auto& c : sc.cells)
        os << "ue " << fmt9(c.ue.x) << ' ' << fmt9(c.ue.y) << ' ' << fmt9(c.ue.z) << '\n';
    if (!sc.cells.empty()) {
        os << "kind";
        for (const auto& c : sc.cells) os << (c.kind == CellKind::Femto ? " femto" : " macro");
        os << '\n';
    }
    for (const auto& row : sc.explicit_gains) {
        os << "gain_row";
        for (double v : row) os << ' ' << fmt9(v);
        os << '\n';
    }
    for (const auto& row : sc.walls) {
        os << "wall_row";
        for (int v : row) os << ' ' << v;
        os << '\n';
    }
    for (const auto& [u, v] : sc.explicit_edges) os << "edge " << u << ' ' << v << '\n';
    return os.str();
}

} // namespace misched
