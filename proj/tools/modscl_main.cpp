// modscl: exact scl / rot / gluing-certificate laboratory for the modular group.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "modscl/braid.hpp"
#include "modscl/cache.hpp"
#include "modscl/chain.hpp"
#include "modscl/circle_search.hpp"
#include "modscl/gluer.hpp"
#include "modscl/lab.hpp"
#include "modscl/matrix.hpp"
#include "modscl/scl.hpp"

using namespace modscl;

namespace {

constexpr const char* kSolverVersion = "modscl-1";

int run(int argc, char** argv) {
    CLI::App app{"exact rotation quasimorphism, scl, and immersed-surface certificates on PSL(2,Z)"};
    app.require_subcommand(1);

    std::string cache_path;
    if (const char* env = std::getenv("MODSCL_CACHE")) cache_path = env;
    long bound = 10, length = 8, gap = 5, nmax = 20;
    int p = 3, workers = 1;
    std::string format = "csv", out_path, scan_order = "negative-first";
    app.add_option("--cache", cache_path, "result cache path (env MODSCL_CACHE)");

    std::string word_arg, chain_arg, state_arg, file_arg;

    auto* c_rot = app.add_subcommand("rot", "rotation quasimorphism of a word");
    c_rot->add_option("word", word_arg)->required();

    auto* c_psi = app.add_subcommand("psi", "Rademacher Psi = 6 rot");
    c_psi->add_option("word", word_arg)->required();

    auto* c_mat = app.add_subcommand("matrix", "matrix representative and class");
    c_mat->add_option("word", word_arg)->required();

    auto* c_scl = app.add_subcommand("scl", "exact scl of a chain");
    c_scl->add_option("chain", chain_arg)->required();
    bool show_vector = false;
    c_scl->add_flag("--vector", show_vector, "print the optimal piece vector");

    auto* c_ext = app.add_subcommand("extremal", "test scl = rot/2");
    c_ext->add_option("word", word_arg)->required();

    auto* c_cert = app.add_subcommand("certify", "gluing certificate for a word");
    c_cert->add_option("word", word_arg)->required();
    c_cert->add_option("--p", p, "orbifold parameter (default 3)");
    c_cert->add_option("--gap", gap, "lifting gap (default 5)");
    c_cert->add_option("-o,--out", out_path, "write certificate to file");

    auto* c_verify = app.add_subcommand("verify", "verify a certificate file");
    c_verify->add_option("file", file_arg)->required();

    auto* c_scan = app.add_subcommand("scan-n", "n(X): first extremal stabilization");
    c_scan->add_option("word", word_arg)->required();
    c_scan->add_option("--bound", bound, "scan bound B (default 10)");
    c_scan->add_option("--scan-order", scan_order, "negative-first | zero-first");

    auto* c_hist = app.add_subcommand("histogram", "n(X) over all words of a length");
    c_hist->add_option("--length", length, "word length k (default 8, max 12)");
    c_hist->add_option("--bound", bound, "scan bound B (default 10)");
    c_hist->add_option("--workers", workers, "worker threads");
    c_hist->add_option("--format", format, "csv | svg");
    c_hist->add_option("--scan-order", scan_order, "negative-first | zero-first");
    c_hist->add_option("-o,--out", out_path, "output file (default stdout)");

    auto* c_stut = app.add_subcommand("stutter", "extremality profile of R^n X");
    c_stut->add_option("word", word_arg)->required();
    c_stut->add_option("--nmax", nmax, "profile up to n = nmax (default 20, max 60)");

    auto* c_circ = app.add_subcommand("circles", "can a circle state be glued up?");
    c_circ->add_option("state", state_arg, "comma-separated circle literals")->required();
    c_circ->add_option("--p", p, "orbifold parameter (default 3)");

    auto* c_stab = app.add_subcommand("stabilize", "least n with glue(R^n X) verified");
    c_stab->add_option("word", word_arg)->required();
    c_stab->add_option("--nmax", nmax, "scan cap");
    c_stab->add_option("--p", p);

    auto* c_braid = app.add_subcommand("braid", "project a 3-strand braid word");
    c_braid->add_option("word", word_arg, "e.g. \"s2 s1- s2\"")->required();

    auto* c_cache = app.add_subcommand("cache", "cache maintenance");
    auto* c_compact = c_cache->add_subcommand("compact", "drop stale lines");

    CLI11_PARSE(app, argc, argv);

    ResultCache cache(cache_path, kSolverVersion);
    ExperimentConfig cfg;
    cfg.bound = bound;
    cfg.workers = workers;
    cfg.scan_most_negative_first = scan_order != "zero-first";
    cfg.cache = cache_path.empty() ? nullptr : &cache;

    auto emit = [&](const std::string& text) {
        if (out_path.empty()) {
            std::cout << text;
        } else {
            std::ofstream out(out_path);
            out << text;
        }
    };

    if (*c_rot) {
        std::cout << to_string(rot(parse_word(word_arg))) << "\n";
    } else if (*c_psi) {
        std::cout << rademacher_psi(parse_word(word_arg)) << "\n";
    } else if (*c_mat) {
        CyclicWord w = parse_word(word_arg);
        ProjectiveMatrix m = to_matrix(w);
        std::cout << m.str() << "  " << to_string(classify_matrix(m)) << "\n";
    } else if (*c_scl) {
        Chain ch = parse_chain(chain_arg);
        SclResult r;
        if (ch.terms().size() == 1 && ch.terms().begin()->second.second == 1) {
            // single words take the torsion extension when their Z/6 class
            // is nonzero; chains proper stay gated by admissibility
            r = scl_word(ch.terms().begin()->second.first);
        } else {
            r = scl(ch);
        }
        std::cout << to_string(r.value) << "\n";
        if (show_vector)
            for (const auto& [k, v] : r.optimal_vector)
                std::cout << k << " = " << to_string(v) << "\n";
    } else if (*c_ext) {
        Extremality e = is_rot_extremal(canonicalize(parse_word(word_arg)).word);
        std::cout << (e.extremal ? "extremal" : "not extremal") << "  scl="
                  << to_string(e.scl_value) << " rot=" << to_string(e.rot_value)
                  << " gap=" << to_string(e.gap) << "\n";
    } else if (*c_cert) {
        GluingCertificate cert = glue(canonicalize(parse_word(word_arg)).word, p, gap);
        VerificationReport rep = verify(cert);
        emit(serialize_certificate(cert));
        std::cerr << (rep.pass ? "PASS" : ("FAIL: " + rep.detail)) << "  chi_o="
                  << to_string(cert.chi_orb) << " points=";
        for (std::size_t i = 0; i < cert.orbifold_points.size(); ++i)
            std::cerr << (i ? "," : "") << cert.orbifold_points[i];
        std::cerr << "\n";
        if (!rep.pass) return 2;
    } else if (*c_verify) {
        std::ifstream in(file_arg);
        if (!in) {
            std::cerr << "cannot open " << file_arg << "\n";
            return 1;
        }
        std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        VerificationReport rep = verify(parse_certificate(text));
        std::cout << (rep.pass ? "PASS" : "FAIL: " + rep.detail) << "\n";
        if (!rep.pass) return 2;
    } else if (*c_scan) {
        auto n = n_of_x(parse_word(word_arg), cfg);
        if (n) std::cout << *n << "\n";
        else std::cout << ">=" << bound << "\n";
    } else if (*c_hist) {
        Histogram h = histogram(length, cfg);
        emit(format == "svg" ? histogram_svg(h) : histogram_csv(h));
    } else if (*c_stut) {
        StutterReport rep = stutter_scan(parse_word(word_arg), nmax, cfg);
        for (const auto& pt : rep.profile)
            std::cout << pt.n << " " << (pt.extremal ? "T" : "F") << "\n";
        for (auto [start, len] : rep.stutters)
            std::cout << "stutter at n=" << start << " length " << len << "\n";
    } else if (*c_circ) {
        CircleState s = parse_circle_state(state_arg, p);
        GlueDecision d = can_glue(s);
        if (d.yes) {
            std::cout << "YES  cones=";
            for (std::size_t i = 0; i < d.cones.size(); ++i)
                std::cout << (i ? "," : "") << d.cones[i];
            std::cout << "\n";
            for (const Move& m : d.certificate) std::cout << "move=" << m.str() << "\n";
        } else {
            std::cout << "NO(" << to_string(d.reason) << (d.definite ? "" : ", inconclusive")
                      << ")\n";
        }
    } else if (*c_stab) {
        auto n = minimal_stabilization(parse_word(word_arg), nmax, p);
        if (n) std::cout << *n << "\n";
        else std::cout << "none <= " << nmax << "\n";
    } else if (*c_braid) {
        BraidProjection pr = braid_project(parse_braid(word_arg));
        if (pr.positive)
            std::cout << pr.word.str() << "\n";
        else
            std::cout << pr.signed_form.str() << "  (not in positive normal form)\n";
    } else if (*c_cache) {
        if (*c_compact) {
            long dropped = cache.compact();
            std::cout << "dropped " << dropped << " lines, kept " << cache.size() << "\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const SclError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code == SclErrorCode::Capacity ? 3 : 2;
    } catch (const InsufficientRoom& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
