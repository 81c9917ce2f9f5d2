#include "helmsim/vessel_config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "helmsim/errors.hpp"

namespace helmsim {

namespace {

using json = nlohmann::ordered_json;

double require_number(const json& j, const std::string& section, const char* key) {
    if (!j.contains(key)) throw ParseError("config: missing field " + section + "." + key);
    const auto& v = j.at(key);
    if (!v.is_number()) throw ParseError("config: field " + section + "." + key + " must be a number");
    return v.get<double>();
}

double optional_number(const json& j, const char* key, double fallback) {
    if (!j.contains(key)) return fallback;
    return j.at(key).get<double>();
}

CurveTable parse_table(const json& j, const std::string& name) {
    CurveTable t;
    if (!j.is_array()) throw ParseError("config: table " + name + " must be an array of [x, value] pairs");
    for (const auto& row : j) {
        if (!row.is_array() || row.size() != 2 || !row[0].is_number() || !row[1].is_number()) {
            throw ParseError("config: table " + name + " rows must be [x, value] number pairs");
        }
        t.rows.push_back({row[0].get<double>(), row[1].get<double>()});
    }
    return t;
}

json dump_table(const CurveTable& t) {
    json a = json::array();
    for (const auto& r : t.rows) a.push_back({r[0], r[1]});
    return a;
}

enum class Mirror { None, Even, Odd };

/// Build a radian-domain curve from a degree-indexed angle table. One-sided
/// wind tables (span within [0, 180]) are expanded to the full circle with
/// the given symmetry about head wind.
SampledCurve build_angle_curve(const CurveTable& table, const std::string& name,
                               SampledCurve::Extrapolation mode, Mirror mirror) {
    if (table.rows.empty()) throw ValidationError("config: table " + name + " is empty");
    auto rows = table.rows;
    std::sort(rows.begin(), rows.end(),
              [](const auto& a, const auto& b) { return a[0] < b[0]; });
    for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
        if (rows[i][0] == rows[i + 1][0]) {
            throw ValidationError("config: table " + name + " has duplicate angle " +
                                  std::to_string(rows[i][0]));
        }
    }

    if (mode == SampledCurve::Extrapolation::Periodic) {
        const double lo = rows.front()[0];
        const double hi = rows.back()[0];
        if (lo < 0.0 || hi >= 360.0) {
            throw ValidationError("config: table " + name + " angles must lie in [0, 360)");
        }
        if (mirror != Mirror::None && hi <= 180.0) {
            // One-sided table: mirror interior knots onto (180, 360).
            if (mirror == Mirror::Odd) {
                for (const auto& r : rows) {
                    if ((r[0] == 0.0 || r[0] == 180.0) && r[1] != 0.0) {
                        throw ValidationError("config: odd-symmetric table " + name +
                                              " must be 0 at 0 and 180 deg");
                    }
                }
            }
            const double sign = (mirror == Mirror::Odd) ? -1.0 : 1.0;
            std::vector<std::array<double, 2>> mirrored;
            for (const auto& r : rows) {
                if (r[0] > 0.0 && r[0] < 180.0) mirrored.push_back({360.0 - r[0], sign * r[1]});
            }
            rows.insert(rows.end(), mirrored.begin(), mirrored.end());
            std::sort(rows.begin(), rows.end(),
                      [](const auto& a, const auto& b) { return a[0] < b[0]; });
        }
    }

    std::vector<double> xs, ys;
    xs.reserve(rows.size());
    ys.reserve(rows.size());
    for (const auto& r : rows) {
        xs.push_back(deg2rad(r[0]));
        ys.push_back(r[1]);
    }
    return SampledCurve(std::move(xs), std::move(ys), mode, kTwoPi);
}

void check(bool ok, const std::string& msg) {
    if (!ok) throw ValidationError("config: " + msg);
}

}  // namespace

double eval_poly(const std::array<double, 4>& c, double J) {
    return c[0] + J * (c[1] + J * (c[2] + J * c[3]));
}

double ResistanceModel::operator()(double u_abs) const {
    if (!curve.empty()) return curve(u_abs);
    return quadratic_r2 * u_abs * u_abs;
}

void finalize_config(VesselConfig& cfg) {
    cfg.rudder.C_L = build_angle_curve(cfg.rudder.C_L_table, "rudder.C_L",
                                       SampledCurve::Extrapolation::Clamp, Mirror::None);
    cfg.rudder.C_D = build_angle_curve(cfg.rudder.C_D_table, "rudder.C_D",
                                       SampledCurve::Extrapolation::Clamp, Mirror::None);
    cfg.windage.C_X = build_angle_curve(cfg.windage.C_X_table, "windage.C_X",
                                        SampledCurve::Extrapolation::Periodic, Mirror::Even);
    cfg.windage.C_Y = build_angle_curve(cfg.windage.C_Y_table, "windage.C_Y",
                                        SampledCurve::Extrapolation::Periodic, Mirror::Odd);
    cfg.windage.C_N = build_angle_curve(cfg.windage.C_N_table, "windage.C_N",
                                        SampledCurve::Extrapolation::Periodic, Mirror::Odd);
    if (!cfg.hull.resistance.table.rows.empty()) {
        auto rows = cfg.hull.resistance.table.rows;
        std::sort(rows.begin(), rows.end(),
                  [](const auto& a, const auto& b) { return a[0] < b[0]; });
        std::vector<double> xs, ys;
        for (const auto& r : rows) {
            xs.push_back(r[0]);
            ys.push_back(r[1]);
        }
        cfg.hull.resistance.curve =
            SampledCurve(std::move(xs), std::move(ys), SampledCurve::Extrapolation::Clamp);
    } else {
        cfg.hull.resistance.curve = SampledCurve();
    }
    validate_config(cfg);
}

void validate_config(const VesselConfig& cfg) {
    const auto& ms = cfg.mass;
    check(ms.m > 0.0, "mass.m must be > 0");
    check(ms.I_z > 0.0, "mass.I_z must be > 0");

    const auto& h = cfg.hull;
    check(h.B > 0.0, "hull.B must be > 0");
    check(h.L_BWL > 0.0, "hull.L_BWL must be > 0");
    check(h.L_pp > 0.0, "hull.L_pp must be > 0");
    check(h.rho > 0.0, "hull.rho must be > 0");
    check(h.g > 0.0, "hull.g must be > 0");
    check(std::abs(ms.x_G) < h.L_pp / 2.0, "mass.x_G must satisfy |x_G| < L_pp/2");

    const auto& d = cfg.derivatives;
    check(ms.m - d.X_udot > 0.0, "derivatives.X_udot: surge inertia (m - X_udot) must be > 0");
    {
        const double a11 = ms.m - d.Y_vdot;
        const double a12 = ms.m * ms.x_G - d.Y_rdot;
        const double a21 = ms.m * ms.x_G - d.N_vdot;
        const double a22 = ms.I_z - d.N_rdot;
        check(a11 * a22 - a12 * a21 > 0.0,
              "derivatives: sway/yaw inertia matrix determinant "
              "(m - Y_vdot)(I_z - N_rdot) - (m*x_G - Y_rdot)(m*x_G - N_vdot) must be > 0");
    }

    const auto& rd = cfg.rudder;
    check(rd.A_R > 0.0, "rudder.A_R must be > 0");
    check(rd.gamma_R >= 0.0, "rudder.gamma_R must be >= 0");
    check(rd.k_prop > 0.0, "rudder.k_prop must be > 0");
    check(rd.C_L(0.0) == 0.0, "rudder.C_L must be 0 at zero inflow angle");
    for (std::size_t i = 0; i < rd.C_D.size(); ++i) {
        check(rd.C_D.ys()[i] >= 0.0, "rudder.C_D must be >= 0 everywhere");
    }

    const auto& p = cfg.propeller;
    check(p.D > 0.0, "propeller.D must be > 0");
    check(p.t_p >= 0.0 && p.t_p < 1.0, "propeller.t_p must lie in [0, 1)");
    check(p.w_p >= 0.0 && p.w_p < 1.0, "propeller.w_p must lie in [0, 1)");
    check(p.k_T[0] > 0.0, "propeller.k_T bollard coefficient c1 must be > 0");

    const auto& w = cfg.windage;
    check(w.A_F > 0.0, "windage.A_F must be > 0");
    check(w.A_L > 0.0, "windage.A_L must be > 0");
    check(w.L_OA > 0.0, "windage.L_OA must be > 0");
    check(w.rho_air > 0.0, "windage.rho_air must be > 0");

    const auto& res = h.resistance;
    if (!res.curve.empty()) {
        const auto& xs = res.curve.xs();
        const auto& ys = res.curve.ys();
        check(xs.front() == 0.0 && ys.front() == 0.0, "hull.resistance table must start at (0, 0)");
        for (std::size_t i = 0; i < ys.size(); ++i) {
            check(ys[i] >= 0.0, "hull.resistance must be >= 0 everywhere");
            if (i > 0) check(ys[i] >= ys[i - 1], "hull.resistance must be nondecreasing");
        }
    } else {
        check(res.quadratic_r2 >= 0.0, "hull.resistance.quadratic_r2 must be >= 0");
    }

    check(cfg.r_max > 0.0, "r_max must be > 0");
}

VesselConfig config_from_json(const json& j) {
    VesselConfig cfg;

    const auto& jm = j.at("mass");
    cfg.mass.m = require_number(jm, "mass", "m");
    cfg.mass.I_z = require_number(jm, "mass", "I_z");
    cfg.mass.x_G = require_number(jm, "mass", "x_G");

    const auto& jd = j.at("derivatives");
    auto& d = cfg.derivatives;
    d.X_udot = require_number(jd, "derivatives", "X_udot");
    d.Y_vdot = require_number(jd, "derivatives", "Y_vdot");
    d.Y_rdot = require_number(jd, "derivatives", "Y_rdot");
    d.N_vdot = require_number(jd, "derivatives", "N_vdot");
    d.N_rdot = require_number(jd, "derivatives", "N_rdot");
    d.Y_v = require_number(jd, "derivatives", "Y_v");
    d.Y_r = require_number(jd, "derivatives", "Y_r");
    d.N_v = require_number(jd, "derivatives", "N_v");
    d.N_r = require_number(jd, "derivatives", "N_r");
    d.Y_vv = require_number(jd, "derivatives", "Y_vv");
    d.Y_vr = require_number(jd, "derivatives", "Y_vr");
    d.Y_rr = require_number(jd, "derivatives", "Y_rr");
    d.N_rr = require_number(jd, "derivatives", "N_rr");
    d.N_rrv = require_number(jd, "derivatives", "N_rrv");
    d.N_vvr = require_number(jd, "derivatives", "N_vvr");
    d.X_vr = require_number(jd, "derivatives", "X_vr");

    const auto& jr = j.at("rudder");
    auto& rd = cfg.rudder;
    rd.A_R = require_number(jr, "rudder", "A_R");
    rd.x_R = require_number(jr, "rudder", "x_R");
    rd.a_H = require_number(jr, "rudder", "a_H");
    rd.t_R = require_number(jr, "rudder", "t_R");
    rd.gamma_R = optional_number(jr, "gamma_R", 0.4);
    rd.k_prop = optional_number(jr, "k_prop", 1.0);
    rd.C_L_table = parse_table(jr.at("C_L"), "rudder.C_L");
    rd.C_D_table = parse_table(jr.at("C_D"), "rudder.C_D");

    const auto& jp = j.at("propeller");
    auto& p = cfg.propeller;
    p.D = require_number(jp, "propeller", "D");
    p.t_p = require_number(jp, "propeller", "t_p");
    p.w_p = require_number(jp, "propeller", "w_p");
    for (const char* key : {"k_T", "k_Q"}) {
        const auto& arr = jp.at(key);
        if (!arr.is_array() || arr.size() < 3 || arr.size() > 4) {
            throw ParseError(std::string("config: propeller.") + key +
                             " must have 3 or 4 coefficients");
        }
        auto& dst = (std::string(key) == "k_T") ? p.k_T : p.k_Q;
        dst = {0.0, 0.0, 0.0, 0.0};
        for (std::size_t i = 0; i < arr.size(); ++i) dst[i] = arr[i].get<double>();
    }

    const auto& jw = j.at("windage");
    auto& w = cfg.windage;
    w.A_F = require_number(jw, "windage", "A_F");
    w.A_L = require_number(jw, "windage", "A_L");
    w.L_OA = require_number(jw, "windage", "L_OA");
    w.rho_air = optional_number(jw, "rho_air", 1.225);
    w.C_X_table = parse_table(jw.at("C_X"), "windage.C_X");
    w.C_Y_table = parse_table(jw.at("C_Y"), "windage.C_Y");
    w.C_N_table = parse_table(jw.at("C_N"), "windage.C_N");

    const auto& jh = j.at("hull");
    auto& h = cfg.hull;
    h.B = require_number(jh, "hull", "B");
    h.L_BWL = require_number(jh, "hull", "L_BWL");
    h.L_pp = require_number(jh, "hull", "L_pp");
    h.rho = optional_number(jh, "rho", 1025.0);
    h.g = optional_number(jh, "g", 9.81);
    const auto& jres = jh.at("resistance");
    if (jres.contains("table")) {
        h.resistance.table = parse_table(jres.at("table"), "hull.resistance.table");
    } else if (jres.contains("quadratic_r2")) {
        h.resistance.quadratic_r2 = jres.at("quadratic_r2").get<double>();
    } else {
        throw ParseError("config: hull.resistance needs quadratic_r2 or table");
    }

    cfg.r_max = require_number(j, "<root>", "r_max");

    finalize_config(cfg);
    return cfg;
}

nlohmann::ordered_json config_to_json(const VesselConfig& cfg) {
    json j;
    j["mass"] = {{"m", cfg.mass.m}, {"I_z", cfg.mass.I_z}, {"x_G", cfg.mass.x_G}};

    const auto& d = cfg.derivatives;
    j["derivatives"] = {{"X_udot", d.X_udot}, {"Y_vdot", d.Y_vdot}, {"Y_rdot", d.Y_rdot},
                        {"N_vdot", d.N_vdot}, {"N_rdot", d.N_rdot}, {"Y_v", d.Y_v},
                        {"Y_r", d.Y_r},       {"N_v", d.N_v},       {"N_r", d.N_r},
                        {"Y_vv", d.Y_vv},     {"Y_vr", d.Y_vr},     {"Y_rr", d.Y_rr},
                        {"N_rr", d.N_rr},     {"N_rrv", d.N_rrv},   {"N_vvr", d.N_vvr},
                        {"X_vr", d.X_vr}};

    const auto& rd = cfg.rudder;
    j["rudder"] = {{"A_R", rd.A_R},         {"x_R", rd.x_R},
                   {"a_H", rd.a_H},         {"t_R", rd.t_R},
                   {"gamma_R", rd.gamma_R}, {"k_prop", rd.k_prop},
                   {"C_L", dump_table(rd.C_L_table)}, {"C_D", dump_table(rd.C_D_table)}};

    const auto& p = cfg.propeller;
    auto poly = [](const std::array<double, 4>& c) {
        json a = json::array({c[0], c[1], c[2]});
        if (c[3] != 0.0) a.push_back(c[3]);
        return a;
    };
    j["propeller"] = {
        {"D", p.D}, {"t_p", p.t_p}, {"w_p", p.w_p}, {"k_T", poly(p.k_T)}, {"k_Q", poly(p.k_Q)}};

    const auto& w = cfg.windage;
    j["windage"] = {{"A_F", w.A_F},      {"A_L", w.A_L},
                    {"L_OA", w.L_OA},    {"rho_air", w.rho_air},
                    {"C_X", dump_table(w.C_X_table)}, {"C_Y", dump_table(w.C_Y_table)},
                    {"C_N", dump_table(w.C_N_table)}};

    const auto& h = cfg.hull;
    json jres;
    if (!h.resistance.table.rows.empty()) {
        jres["table"] = dump_table(h.resistance.table);
    } else {
        jres["quadratic_r2"] = h.resistance.quadratic_r2;
    }
    j["hull"] = {{"B", h.B},     {"L_BWL", h.L_BWL}, {"L_pp", h.L_pp},
                 {"rho", h.rho}, {"g", h.g},         {"resistance", jres}};

    j["r_max"] = cfg.r_max;
    return j;
}

VesselConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("config: cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("config: " + path + ": " + e.what());
    }
    try {
        return config_from_json(j);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("config: " + path + ": " + e.what());
    }
}

void write_config(const VesselConfig& cfg, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("config: cannot write " + path);
    out << config_to_json(cfg).dump(2) << "\n";
}

}  // namespace helmsim
