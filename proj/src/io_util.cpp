#include "helmsim/io_util.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "helmsim/errors.hpp"

namespace helmsim {

namespace fs = std::filesystem;

std::string fmt_g9(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

double round_sig9(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return std::strtod(buf, nullptr);
}

namespace {

// Days since 1970-01-01 for a proleptic Gregorian date.
std::int64_t days_from_civil(int y, unsigned m, unsigned d) {
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

void civil_from_days(std::int64_t z, int& y, unsigned& m, unsigned& d) {
    z += 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const std::int64_t yr = static_cast<std::int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    d = doy - (153 * mp + 2) / 5 + 1;
    m = mp + (mp < 10 ? 3 : -9);
    y = static_cast<int>(yr + (m <= 2));
}

}  // namespace

double parse_iso8601(const std::string& s) {
    int y = 0, mo = 0, d = 0, h = 0, mi = 0;
    double sec = 0.0;
    int consumed = 0;
    if (std::sscanf(s.c_str(), "%d-%d-%dT%d:%d:%lf%n", &y, &mo, &d, &h, &mi, &sec, &consumed) != 6) {
        throw ParseError("timestamp: expected YYYY-MM-DDTHH:MM:SS, got '" + s + "'");
    }
    const std::string rest = s.substr(static_cast<std::size_t>(consumed));
    if (!rest.empty() && rest != "Z") {
        throw ParseError("timestamp: unsupported suffix '" + rest + "' in '" + s + "'");
    }
    if (mo < 1 || mo > 12 || d < 1 || d > 31 || h < 0 || h > 23 || mi < 0 || mi > 59 ||
        sec < 0.0 || sec >= 61.0) {
        throw ParseError("timestamp: field out of range in '" + s + "'");
    }
    return static_cast<double>(days_from_civil(y, static_cast<unsigned>(mo),
                                               static_cast<unsigned>(d))) * 86400.0 +
           h * 3600.0 + mi * 60.0 + sec;
}

std::string format_iso8601(double epoch_seconds) {
    const double whole = std::floor(epoch_seconds);
    double frac = epoch_seconds - whole;
    std::int64_t total = static_cast<std::int64_t>(whole);
    // Round fractional part to milliseconds, carrying into the seconds.
    int ms = static_cast<int>(std::lround(frac * 1000.0));
    if (ms >= 1000) {
        ms -= 1000;
        total += 1;
    }
    std::int64_t days = total / 86400;
    std::int64_t rem = total % 86400;
    if (rem < 0) {
        rem += 86400;
        days -= 1;
    }
    int y;
    unsigned mo, d;
    civil_from_days(days, y, mo, d);
    const int h = static_cast<int>(rem / 3600);
    const int mi = static_cast<int>((rem % 3600) / 60);
    const int sec = static_cast<int>(rem % 60);
    char buf[48];
    if (ms != 0) {
        std::snprintf(buf, sizeof(buf), "%04d-%02u-%02uT%02d:%02d:%02d.%03dZ", y, mo, d, h, mi, sec, ms);
    } else {
        std::snprintf(buf, sizeof(buf), "%04d-%02u-%02uT%02d:%02d:%02dZ", y, mo, d, h, mi, sec);
    }
    return buf;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) {
        const auto b = field.find_first_not_of(" \t\r");
        const auto e = field.find_last_not_of(" \t\r");
        out.push_back(b == std::string::npos ? "" : field.substr(b, e - b + 1));
    }
    if (!line.empty() && line.back() == ',') out.push_back("");
    return out;
}

namespace {

bool wildcard_match(const std::string& pat, const std::string& name) {
    std::size_t p = 0, n = 0, star = std::string::npos, mark = 0;
    while (n < name.size()) {
        if (p < pat.size() && (pat[p] == '?' || pat[p] == name[n])) {
            ++p;
            ++n;
        } else if (p < pat.size() && pat[p] == '*') {
            star = p++;
            mark = n;
        } else if (star != std::string::npos) {
            p = star + 1;
            n = ++mark;
        } else {
            return false;
        }
    }
    while (p < pat.size() && pat[p] == '*') ++p;
    return p == pat.size();
}

}  // namespace

std::vector<std::string> glob_files(const std::string& pattern) {
    const fs::path pat(pattern);
    const std::string name = pat.filename().string();
    std::vector<std::string> out;
    if (name.find('*') == std::string::npos && name.find('?') == std::string::npos) {
        if (fs::exists(pat)) out.push_back(pat.string());
        return out;
    }
    const fs::path dir = pat.parent_path().empty() ? fs::path(".") : pat.parent_path();
    if (!fs::is_directory(dir)) return out;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (!entry.is_regular_file()) continue;
        if (wildcard_match(name, entry.path().filename().string())) {
            out.push_back(entry.path().string());
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace helmsim
