#include "humbert/verify.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "humbert/errors.hpp"

namespace humbert {

bool VerificationReport::pass() const {
    for (const CheckRow& r : rows)
        if (!r.pass) return false;
    return !rows.empty();
}

namespace {

std::string fmt_real(real v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.21Lg", v);
    return buf;
}

bool needs_quoting(const std::string& s) {
    return s.find_first_of(",\"\n") != std::string::npos;
}

std::string quote(const std::string& s) {
    if (!needs_quoting(s)) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

// Splits one CSV record honouring quoted fields.
std::vector<std::string> split_record(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (size_t i = 0; i < line.size(); ++i) {
        char ch = line[i];
        if (quoted) {
            if (ch == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur += ch;
            }
        } else if (ch == '"') {
            quoted = true;
        } else if (ch == ',') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    fields.push_back(cur);
    return fields;
}

} // namespace

std::string to_csv(const std::vector<CheckRow>& rows, bool header) {
    std::string out;
    if (header)
        out += "suite,check,param_json,grid_point,measured,expected_lo,"
               "expected_hi,pass\n";
    for (const CheckRow& r : rows) {
        out += quote(r.suite);
        out += ',';
        out += quote(r.check);
        out += ',';
        out += quote(r.param_json);
        out += ',';
        out += quote(r.grid_point);
        out += ',';
        out += fmt_real(r.measured);
        out += ',';
        out += fmt_real(r.expected_lo);
        out += ',';
        out += fmt_real(r.expected_hi);
        out += ',';
        out += r.pass ? '1' : '0';
        out += '\n';
    }
    return out;
}

std::vector<CheckRow> parse_csv(const std::string& text) {
    std::vector<CheckRow> rows;
    size_t pos = 0;
    bool first = true;
    while (pos < text.size()) {
        size_t nl = text.find('\n', pos);
        if (nl == std::string::npos) nl = text.size();
        std::string line = text.substr(pos, nl - pos);
        pos = nl + 1;
        if (line.empty()) continue;
        if (first && line.rfind("suite,", 0) == 0) {
            first = false;
            continue;
        }
        first = false;
        auto f = split_record(line);
        if (f.size() != 8)
            throw DomainError("parse_csv: malformed row");
        CheckRow r;
        r.suite = f[0];
        r.check = f[1];
        r.param_json = f[2];
        r.grid_point = f[3];
        r.measured = std::strtold(f[4].c_str(), nullptr);
        r.expected_lo = std::strtold(f[5].c_str(), nullptr);
        r.expected_hi = std::strtold(f[6].c_str(), nullptr);
        r.pass = f[7] == "1";
        rows.push_back(std::move(r));
    }
    return rows;
}

real fit_slope(const std::vector<real>& x, const std::vector<real>& y) {
    if (x.size() != y.size() || x.size() < 2)
        throw DomainError("fit_slope: need >= 2 paired points");
    real n = static_cast<real>(x.size());
    real sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    real denom = n * sxx - sx * sx;
    if (denom == 0)
        throw DomainError("fit_slope: degenerate abscissae");
    return (n * sxy - sx * sy) / denom;
}

real rel_diff(const EvalResult& u, const EvalResult& v) {
    real ls = std::max(u.log_scale, v.log_scale);
    cplx uv = u.value * std::exp(cplx(u.log_scale - ls, 0));
    cplx vv = v.value * std::exp(cplx(v.log_scale - ls, 0));
    real scale = std::max(std::abs(uv), std::abs(vv));
    if (scale == 0) return std::abs(uv - vv);
    return std::abs(uv - vv) / scale;
}

} // namespace humbert
