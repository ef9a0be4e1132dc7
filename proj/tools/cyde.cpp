// cyde: catalog browsing, sequence generation, operator fitting,
// certification, transforms, and congruence checks on the command line.
//
// Exit codes: 0 success, 1 check failed, 2 usage error / not found,
// 3 internal arithmetic error.

#include <CLI11.hpp>

#include "cy/catalog.hpp"
#include "cy/congruence.hpp"
#include "cy/fit.hpp"
#include "cy/mirror.hpp"
#include "cy/pullback.hpp"
#include "cy/store.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;
constexpr int kArithmetic = 3;

struct CommandError {
    int code;
    std::string message;
};

cy::ThetaOperator operator_from_arg(const std::string& arg) {
    auto it = cy::catalog().find(arg);
    if (it != cy::catalog().end()) {
        if (!it->second.op)
            throw CommandError{kUsage, "catalog entry " + arg + " has no operator"};
        return *it->second.op;
    }
    std::ifstream in(arg);
    if (!in) throw CommandError{kUsage, "cannot open operator file " + arg};
    return cy::read_operator(in);
}

std::vector<cy::Q> sequence_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CommandError{kUsage, "cannot open sequence file " + path};
    std::vector<cy::Q> seq;
    std::string line;
    while (std::getline(in, line)) {
        std::string tok;
        std::istringstream ls(line);
        while (ls >> tok) {
            if (tok[0] == '#') break;
            seq.push_back(cy::parse_rational(tok));
        }
    }
    if (seq.empty()) throw CommandError{kUsage, "empty sequence file " + path};
    return seq;
}

// id with a generator, id with only an operator (recurrence advance), or a file
std::vector<cy::Q> sequence_from_arg(const std::string& arg, size_t N) {
    auto it = cy::catalog().find(arg);
    if (it != cy::catalog().end()) {
        const cy::CatalogEntry& e = it->second;
        if (e.gen) return e.gen(N);
        if (e.op) return cy::series_from_operator(*e.op, N);
        throw CommandError{kUsage, "catalog entry " + arg + " has no generator"};
    }
    std::vector<cy::Q> seq = sequence_from_file(arg);
    if (seq.size() < N + 1)
        throw CommandError{kUsage, "sequence file " + arg + " has fewer than " +
                                       std::to_string(N + 1) + " terms"};
    seq.resize(N + 1);
    return seq;
}

void print_sequence(const std::vector<cy::Q>& seq) {
    for (const cy::Q& q : seq) std::cout << cy::to_string(q) << "\n";
}

std::string verified_status(const cy::CatalogEntry& e) {
    if (!e.op || !e.gen) return "-";
    return cy::verify(*e.op, e.gen(20)) ? "yes" : "no";
}

int cmd_catalog_list() {
    for (const auto& id : cy::catalog_ids()) {
        const cy::CatalogEntry& e = cy::catalog_entry(id);
        std::cout << id;
        if (e.op)
            std::cout << " order=" << e.op->order() << " degree=" << e.op->degree();
        else
            std::cout << " order=- degree=-";
        std::cout << " kind=" << e.kind << " verified=" << verified_status(e)
                  << "\n";
    }
    return kOk;
}

int cmd_catalog_show(const std::string& id) {
    auto it = cy::catalog().find(id);
    if (it == cy::catalog().end()) {
        std::cerr << "catalog: unknown id " << id << "\n";
        return kUsage;
    }
    const cy::CatalogEntry& e = it->second;
    std::cout << "id=" << e.id << "\n"
              << "kind=" << e.kind << "\n"
              << "description=" << e.description << "\n";
    if (e.op) cy::write_operator(std::cout, *e.op);
    return kOk;
}

int cmd_catalog_verify_all(const std::string& store_dir) {
    auto store = cy::read_store(store_dir);
    auto bad = cy::validate_store(store);
    for (const auto& [id, e] : store) {
        bool ok = std::find(bad.begin(), bad.end(), id) == bad.end();
        std::cout << id << " " << (ok ? "ok" : "FAIL") << "\n";
    }
    return bad.empty() ? kOk : kCheckFailed;
}

int cmd_series(const std::string& arg, long N) {
    print_sequence(sequence_from_arg(arg, N));
    return kOk;
}

int cmd_fit(const std::string& file, long order, long degree, long margin) {
    std::vector<cy::Q> seq = sequence_from_file(file);
    cy::FitSpec spec;
    spec.order = order;
    spec.degree = degree;
    spec.margin = margin;
    cy::FitResult res = cy::fit(seq, spec);
    if (!res.success()) {
        std::cerr << "fit: " << res.message << "\n";
        return kCheckFailed;
    }
    cy::write_operator(std::cout, *res.op);
    return kOk;
}

int cmd_check(const std::string& arg, long N, long D) {
    cy::ThetaOperator op = operator_from_arg(arg);
    bool all = true;
    auto emit = [](const std::string& key, const std::string& val) {
        std::cout << key << "=" << val << "\n";
    };
    bool mum = cy::mum_check(op);
    emit("mum", mum ? "true" : "false");
    if (!mum) return kCheckFailed;  // Frobenius-dependent checks skipped
    if (op.order() == 4) {
        bool c2 = cy::cond2_check(op);
        emit("cond2", c2 ? "true" : "false");
        all = all && c2;
    }
    cy::IntegralityReport rep =
        cy::integrality_report(op, static_cast<size_t>(N),
                               static_cast<size_t>(D));
    emit("3a", rep.a3 ? "true" : "false");
    emit("3b", rep.b3 ? "true" : "false");
    all = all && rep.a3 && rep.b3;
    if (op.order() >= 3) {
        emit("3c", rep.c3 ? "true" : "false");
        emit("N0", rep.N0 ? cy::to_string(*rep.N0) : "none");
        for (size_t d = 0; d < rep.instanton.size(); ++d)
            emit("n_" + std::to_string(d + 1), cy::to_string(rep.instanton[d]));
        all = all && rep.c3;
    }
    // Dwork verdicts are reported but never affect the exit status
    std::vector<cy::Q> seq = cy::series_from_operator(op, static_cast<size_t>(N));
    for (long p : {2, 3}) {
        if (static_cast<long>(seq.size()) < p * p) continue;
        bool integral = true;
        for (const cy::Q& q : seq)
            if (!cy::is_integer(q)) integral = false;
        if (!integral) {
            emit("dwork_" + std::to_string(p), "skipped");
            continue;
        }
        cy::DworkReport dw = cy::dwork_check(seq, p, 2);
        emit("dwork_" + std::to_string(p), dw.pass() ? "pass" : "fail");
    }
    return all ? kOk : kCheckFailed;
}

int cmd_mirror_inf(const std::string& arg, const std::string& shift,
                   const std::string& scale) {
    cy::ThetaOperator op = operator_from_arg(arg);
    cy::Q s = cy::parse_rational(shift);
    cy::Q a;
    if (scale == "auto") {
        a = cy::suggest_scale(op, s);
        // pick the sign making the transformed solution positive at its
        // first odd-index nonzero term
        try {
            std::vector<cy::Q> probe =
                cy::series_from_operator(cy::mirror_at_infinity(op, a, s), 10);
            for (size_t n = 1; n < probe.size(); n += 2)
                if (probe[n] != 0) {
                    if (probe[n] < 0) a = -a;
                    break;
                }
        } catch (const std::domain_error&) {
            // vanishing pivot: keep the positive scale
        }
    } else {
        a = cy::parse_rational(scale);
    }
    cy::write_operator(std::cout, cy::mirror_at_infinity(op, a, s));
    return kOk;
}

int cmd_pullback_verify(const std::string& f4, const std::string& f5, long N) {
    cy::ThetaOperator op4 = operator_from_arg(f4);
    cy::ThetaOperator op5 = operator_from_arg(f5);
    bool ok = cy::verify_pullback_pair(op4, op5, static_cast<size_t>(N));
    std::cout << "pullback: " << (ok ? "PASS" : "FAIL") << "\n";
    return ok ? kOk : kCheckFailed;
}

int cmd_hadamard(const std::string& a, const std::string& b, long N) {
    print_sequence(
        cy::hadamard(sequence_from_arg(a, N), sequence_from_arg(b, N)));
    return kOk;
}

int cmd_ct(const std::string& file, long N, bool even) {
    std::ifstream in(file);
    if (!in) throw CommandError{kUsage, "cannot open polytope file " + file};
    cy::LaurentPoly S = cy::read_polytope(in);
    std::vector<cy::Q> seq;
    for (long n = 0; n <= N; ++n)
        seq.push_back(cy::Q(cy::ct_power(S, even ? 2 * n : n)));
    print_sequence(seq);
    return kOk;
}

int cmd_dwork(const std::string& arg, long p, long K) {
    long need = 1;
    for (long i = 0; i < K; ++i) need *= p;
    std::vector<cy::Q> seq = sequence_from_arg(arg, need - 1);
    cy::DworkReport rep = cy::dwork_check(seq, p, K);
    std::cout << "dwork p=" << p << " K=" << K << ": "
              << (rep.pass() ? "pass" : "fail") << "\n";
    for (long n : rep.violations) std::cout << "violation n=" << n << "\n";
    return rep.pass() ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic toolkit for Calabi-Yau operators"};
    app.require_subcommand(1);

    std::string store_dir = "data/catalog";
    if (const char* env = std::getenv("CYDE_STORE")) store_dir = env;

    // catalog
    auto* cat = app.add_subcommand("catalog", "browse the entry catalog");
    cat->require_subcommand(1);
    auto* cat_list = cat->add_subcommand("list", "list entries");
    std::string show_id;
    auto* cat_show = cat->add_subcommand("show", "print one entry");
    cat_show->add_option("id", show_id, "entry id")->required();
    auto* cat_verify = cat->add_subcommand("verify-all", "validate the store");
    cat_verify->add_option("--store", store_dir, "store directory");

    // series
    std::string series_arg;
    long N = 40, D = 8;
    auto* ser = app.add_subcommand("series", "print A_0..A_N");
    ser->add_option("id", series_arg, "catalog id or sequence file")->required();
    ser->add_option("-N", N, "last index")->required();

    // fit
    std::string fit_file;
    long order = 0, degree = 0, margin = 5;
    auto* fitc = app.add_subcommand("fit", "find an annihilating operator");
    fitc->add_option("file", fit_file, "sequence file")->required();
    fitc->add_option("--order", order, "operator order")->required();
    fitc->add_option("--degree", degree, "operator degree")->required();
    fitc->add_option("--margin", margin, "extra equations");

    // check
    std::string check_arg;
    auto* chk = app.add_subcommand("check", "certification report");
    chk->add_option("id", check_arg, "catalog id or operator file")->required();
    chk->add_option("-N", N, "integrality truncation");
    chk->add_option("-D", D, "instanton depth");

    // mirror-inf
    std::string mi_arg, mi_shift = "1", mi_scale = "auto";
    auto* mi = app.add_subcommand("mirror-inf", "transform to infinity");
    mi->add_option("id", mi_arg, "catalog id or operator file")->required();
    mi->add_option("--shift", mi_shift, "theta shift");
    mi->add_option("--scale", mi_scale, "scale, or auto");

    // pullback verify
    auto* pb = app.add_subcommand("pullback", "wronskian pullback operations");
    pb->require_subcommand(1);
    std::string pb4, pb5;
    auto* pbv = pb->add_subcommand("verify", "verify an order-4/order-5 pair");
    pbv->add_option("op4", pb4, "order-4 operator")->required();
    pbv->add_option("op5", pb5, "order-5 operator")->required();
    pbv->add_option("-N", N, "verification order");

    // hadamard
    std::string had_a, had_b;
    auto* had = app.add_subcommand("hadamard", "termwise product of sequences");
    had->add_option("a", had_a, "catalog id or sequence file")->required();
    had->add_option("b", had_b, "catalog id or sequence file")->required();
    had->add_option("-N", N, "last index")->required();

    // ct
    std::string ct_file;
    bool ct_even = false;
    auto* ctc = app.add_subcommand("ct", "constant terms of polytope powers");
    ctc->add_option("polytope", ct_file, "polytope file")->required();
    ctc->add_option("-N", N, "last index")->required();
    ctc->add_flag("--even", ct_even, "use S^(2n) instead of S^n");

    // dwork
    std::string dw_arg;
    long dw_p = 0, dw_K = 0;
    auto* dw = app.add_subcommand("dwork", "digit-product congruence check");
    dw->add_option("seq", dw_arg, "catalog id or sequence file")->required();
    dw->add_option("-p", dw_p, "prime")->required();
    dw->add_option("-K", dw_K, "depth")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kOk : kUsage;
    }

    try {
        if (cat_list->parsed()) return cmd_catalog_list();
        if (cat_show->parsed()) return cmd_catalog_show(show_id);
        if (cat_verify->parsed()) return cmd_catalog_verify_all(store_dir);
        if (ser->parsed()) return cmd_series(series_arg, N);
        if (fitc->parsed()) return cmd_fit(fit_file, order, degree, margin);
        if (chk->parsed()) return cmd_check(check_arg, N, D);
        if (mi->parsed()) return cmd_mirror_inf(mi_arg, mi_shift, mi_scale);
        if (pbv->parsed()) return cmd_pullback_verify(pb4, pb5, N);
        if (had->parsed()) return cmd_hadamard(had_a, had_b, N);
        if (ctc->parsed()) return cmd_ct(ct_file, N, ct_even);
        if (dw->parsed()) return cmd_dwork(dw_arg, dw_p, dw_K);
    } catch (const CommandError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "arithmetic error: " << e.what() << "\n";
        return kArithmetic;
    }
    return kUsage;
}
