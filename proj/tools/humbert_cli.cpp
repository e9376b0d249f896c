// Command-line front end: point evaluation of Psi1 / Psi2 / F2 and the
// named verification suites with CSV output.
//
// Exit codes: 0 success (verify: all checks pass), 1 flag or suite
// errors / failed checks, 2 domain violations, 3 convergence failures.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "humbert/errors.hpp"
#include "humbert/f2.hpp"
#include "humbert/psi1.hpp"
#include "humbert/psi2.hpp"
#include "humbert/verify.hpp"

using namespace humbert;
using nlohmann::json;

namespace {

cplx parse_cplx(const std::string& s) {
    size_t comma = s.find(',');
    char* end = nullptr;
    real re = std::strtold(s.c_str(), &end);
    if (end == s.c_str())
        throw CLI::ValidationError("expected 're' or 're,im', got '" + s +
                                   "'");
    real im = 0;
    if (comma != std::string::npos)
        im = std::strtold(s.c_str() + comma + 1, nullptr);
    return {re, im};
}

std::string fmt(real v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.18Lg", v);
    return buf;
}

EvalResult dispatch_eval(const std::string& fn, const std::string& method,
                         const std::map<std::string, cplx>& par, cplx x,
                         cplx y, const EvalConfig& cfg) {
    auto need = [&](const char* k) {
        auto it = par.find(k);
        if (it == par.end())
            throw CLI::ValidationError(std::string("--") + k +
                                       " is required for --fn " + fn);
        return it->second;
    };

    if (fn == "psi1") {
        Psi1Params p{need("a"), need("b"), need("c"), need("cp")};
        static const std::map<std::string, Psi1Method> m{
            {"auto", Psi1Method::auto_select},
            {"double_series", Psi1Method::double_series},
            {"f1f1_series", Psi1Method::f1f1_series},
            {"euler", Psi1Method::euler},
            {"laplace", Psi1Method::laplace},
            {"continuation", Psi1Method::continuation},
            {"bessel_integral", Psi1Method::bessel_integral}};
        auto it = m.find(method);
        if (it == m.end())
            throw CLI::ValidationError("unknown psi1 method '" + method +
                                       "'");
        return psi1_eval(p, x, y, it->second, cfg);
    }
    if (fn == "psi2") {
        Psi2Params p{need("a"), need("c"), need("cp")};
        static const std::map<std::string, Psi2Method> m{
            {"auto", Psi2Method::auto_select},
            {"double_series", Psi2Method::double_series},
            {"f1f1_series", Psi2Method::f1f1_series},
            {"kummer_series", Psi2Method::kummer_series},
            {"mb_integral", Psi2Method::mb_integral}};
        auto it = m.find(method);
        if (it == m.end())
            throw CLI::ValidationError("unknown psi2 method '" + method +
                                       "'");
        return psi2_eval(p, x, y, it->second, cfg);
    }
    if (fn == "f2") {
        F2Params p{need("a"), need("b"), need("bp"), need("c"), need("cp")};
        static const std::map<std::string, F2Method> m{
            {"auto", F2Method::auto_select},
            {"double_series", F2Method::double_series},
            {"laplace", F2Method::laplace},
            {"jaeger", F2Method::jaeger}};
        auto it = m.find(method);
        if (it == m.end())
            throw CLI::ValidationError("unknown f2 method '" + method + "'");
        return f2_eval(p, x, y, it->second, cfg);
    }
    throw CLI::ValidationError("unknown --fn '" + fn + "'");
}

void render(const EvalResult& r, const std::string& format) {
    if (format == "json") {
        json j;
        j["value"] = {{"re", (double)r.value.real()},
                      {"im", (double)r.value.imag()}};
        j["abs_err"] = (double)r.abs_err;
        j["method"] = r.method;
        j["terms"] = r.terms;
        j["evals"] = r.evals;
        j["log_scale"] = (double)r.log_scale;
        std::cout << j.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "value_re,value_im,abs_err,method,terms,evals,"
                     "log_scale\n"
                  << fmt(r.value.real()) << "," << fmt(r.value.imag()) << ","
                  << fmt(r.abs_err) << "," << r.method << "," << r.terms
                  << "," << r.evals << "," << fmt(r.log_scale) << "\n";
    } else {
        std::cout << "value     = (" << fmt(r.value.real()) << ", "
                  << fmt(r.value.imag()) << ")\n"
                  << "abs_err   = " << fmt(r.abs_err) << "\n"
                  << "method    = " << r.method << "\n"
                  << "terms     = " << r.terms << "\n"
                  << "evals     = " << r.evals << "\n"
                  << "log_scale = " << fmt(r.log_scale) << "\n";
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Humbert Psi1/Psi2 and Appell F2 evaluator"};
    app.require_subcommand(1);

    EvalConfig cfg;
    if (const char* env = std::getenv("HUMBERT_PRECISION"))
        cfg.target_rel_err = std::strtold(env, nullptr);

    // ------------------------------------------------------------- eval
    auto* eval = app.add_subcommand("eval", "evaluate one function");
    std::string fn, method = "auto", format = "text";
    std::map<std::string, std::string> par_raw;
    std::string xs, ys;
    eval->add_option("--fn", fn, "psi1 | psi2 | f2")->required();
    for (const char* k : {"a", "b", "bp", "c", "cp"})
        eval->add_option(std::string("--") + k, par_raw[k]);
    eval->add_option("--x", xs, "first argument, 're' or 're,im'")
        ->required();
    eval->add_option("--y", ys, "second argument, 're' or 're,im'")
        ->required();
    eval->add_option("--method", method, "evaluation method (default auto)");
    eval->add_option("--format", format)
        ->check(CLI::IsMember({"text", "json", "csv"}));
    eval->add_option("--precision", cfg.target_rel_err);
    eval->add_option("--max-terms", cfg.max_terms);

    // ----------------------------------------------------------- verify
    auto* verify = app.add_subcommand("verify", "run verification suites");
    HarnessOptions hopt;
    hopt.cfg = cfg;
    std::vector<std::string> suites;
    std::string out_path;
    bool list = false;
    verify->add_option("--suite", suites,
                       "suite name(s); default: all suites");
    verify->add_flag("--list", list, "print suite names and exit");
    verify->add_option("--out", out_path, "write the CSV report here");
    verify->add_option("--seed", hopt.seed);
    verify->add_option("--xi", hopt.henkel_xi)->delimiter(',');
    verify->add_option("--z", hopt.henkel_z)->delimiter(',');
    verify->add_option("--slope-tol", hopt.slope_tol);
    verify->add_option("--envelope-mult", hopt.envelope_mult);
    verify->add_option("--precision", hopt.cfg.target_rel_err);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? 1 : 0;
    }

    try {
        if (eval->parsed()) {
            std::map<std::string, cplx> par;
            for (const auto& [k, v] : par_raw)
                if (!v.empty()) par[k] = parse_cplx(v);
            render(dispatch_eval(fn, method, par, parse_cplx(xs),
                                 parse_cplx(ys), cfg),
                   format);
            return 0;
        }

        if (list) {
            for (const std::string& s : suite_names()) std::cout << s << "\n";
            return 0;
        }
        if (suites.empty()) suites = suite_names();
        for (const std::string& s : suites) {
            bool known = false;
            for (const std::string& k : suite_names()) known |= (k == s);
            if (!known) {
                std::cerr << "unknown suite '" << s << "'\n";
                return 1;
            }
        }

        std::vector<CheckRow> all;
        bool ok = true;
        for (const std::string& s : suites) {
            VerificationReport rep = run_suite(s, hopt);
            ok = ok && rep.pass();
            all.insert(all.end(), rep.rows.begin(), rep.rows.end());
            std::cerr << "suite " << s << ": "
                      << (rep.pass() ? "PASS" : "FAIL") << " ("
                      << rep.rows.size() << " checks, " << rep.runtime_seconds
                      << " s)\n";
        }
        std::string csv = to_csv(all);
        if (!out_path.empty()) {
            std::ofstream f(out_path, std::ios::binary);
            f << csv;
        } else {
            std::cout << csv;
        }
        return ok ? 0 : 1;
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const NoConvergence& e) {
        std::cerr << e.what() << "\n";
        return 3;
    } catch (const DomainError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const EvalError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
}
