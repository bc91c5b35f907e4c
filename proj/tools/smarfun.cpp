// smarfun: evaluate Smarandache-type functions, generate sequences, audit the
// embedded paper tables, and run bounded conjecture scans.

#include <chrono>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "smar/classical.hpp"
#include "smar/iterations.hpp"
#include "smar/parts.hpp"
#include "smar/variants.hpp"
#include "smar/verify.hpp"

namespace {

using smar::u64;
using smar::SearchOutcome;

struct Options {
    u64 search_bound = smar::kDefaultSearchBound;
    u64 prime_bound = smar::kDefaultPrimeBound;
    u64 k = 2;
    u64 m = 2;
};

// Closed set of function names exposed through eval/seq.
// "prime" restricts sequence iteration to prime arguments.
struct FunctionInfo {
    const char* name;
    u64 domain_floor;
    bool primes_only;
};

constexpr FunctionInfo kFunctions[] = {
    {"S", 1, false},          {"Sdf", 1, false},       {"SK", 2, true},
    {"SW", 2, true},          {"Sk", 1, false},        {"Z", 1, false},
    {"SNTP", 1, false},       {"ISp", 2, false},       {"SSp", 0, false},
    {"ISs", 0, false},        {"SSs", 0, false},       {"ISc", 0, false},
    {"SSc", 0, false},        {"sq-comp", 1, false},   {"cub-comp", 1, false},
    {"mpow-comp", 1, false},  {"prime-comp", 1, false}, {"d", 1, false},
    {"sigma", 1, false},      {"gd", 2, false},        {"SI1-d", 1, false},
    {"SI2-sigma", 2, false},  {"SI3-gd", 2, false},
};

const FunctionInfo* find_function(const std::string& name) {
    for (const auto& f : kFunctions)
        if (name == f.name) return &f;
    return nullptr;
}

SearchOutcome evaluate(const std::string& fn, u64 n, const Options& opt) {
    auto v = [](u64 x) { return SearchOutcome::found(x); };
    if (fn == "S") return v(smar::s(n));
    if (fn == "Sdf") return v(smar::sdf(n));
    if (fn == "SK") return smar::sk(n, opt.search_bound);
    if (fn == "SW") return smar::sw(n, opt.search_bound);
    if (fn == "Sk") return v(smar::ceil_s(n, opt.k));
    if (fn == "Z") return v(smar::z(n));
    if (fn == "SNTP") return smar::sntp(n, opt.prime_bound);
    if (fn == "ISp") return v(smar::inferior_prime_part(n));
    if (fn == "SSp") return v(smar::superior_prime_part(n));
    if (fn == "ISs") return v(smar::inferior_square_part(n));
    if (fn == "SSs") return v(smar::superior_square_part(n));
    if (fn == "ISc") return v(smar::inferior_cubic_part(n));
    if (fn == "SSc") return v(smar::superior_cubic_part(n));
    if (fn == "sq-comp") return v(smar::square_complementary(n));
    if (fn == "cub-comp") return v(smar::cubic_complementary(n));
    if (fn == "mpow-comp") return v(smar::m_power_complementary(n, opt.m));
    if (fn == "prime-comp") return v(smar::prime_complementary(n));
    if (fn == "d") return v(smar::num_divisors(n));
    if (fn == "sigma") return v(smar::sum_divisors(n));
    if (fn == "gd") return v(smar::greatest_proper_divisor(n));
    if (fn == "SI1-d")
        return v(smar::iterate_first_kind(smar::IterFunction::divisor_count, n).count);
    if (fn == "SI2-sigma")
        return v(smar::iterate_second_kind(smar::IterFunction::divisor_sum, n, opt.search_bound).count);
    if (fn == "SI3-gd")
        return v(smar::iterate_third_kind(smar::IterFunction::greatest_proper_divisor, n, opt.search_bound).count);
    throw std::invalid_argument("unknown function: " + fn);
}

int run_eval(const std::string& fn, u64 n, const Options& opt) {
    if (!find_function(fn)) {
        std::cerr << "error: unknown function '" << fn << "'\n";
        return 1;
    }
    SearchOutcome o = evaluate(fn, n, opt);
    switch (o.kind) {
        case smar::OutcomeKind::found:
            std::cout << o.value << '\n';
            return 0;
        case smar::OutcomeKind::provably_none:
            std::cout << "provably-none: " << o.reason << '\n';
            return 0;
        case smar::OutcomeKind::not_found_within:
            std::cout << "not-found-within " << o.bound << '\n';
            return 2;
    }
    return 1;
}

int run_seq(const std::string& fn, u64 from, u64 to, const std::string& format,
            const Options& opt) {
    const FunctionInfo* info = find_function(fn);
    if (!info) {
        std::cerr << "error: unknown function '" << fn << "'\n";
        return 1;
    }
    if (from > to) {
        std::cerr << "error: from > to\n";
        return 1;
    }
    if (from < info->domain_floor) {
        std::cerr << "error: " << fn << " is defined from " << info->domain_floor << '\n';
        return 1;
    }
    bool csv = format == "csv";
    if (csv) std::cout << "argument,value\n";
    for (u64 n = from; n <= to; ++n) {
        if (info->primes_only && !smar::is_prime(n)) continue;
        SearchOutcome o = evaluate(fn, n, opt);
        if (csv) {
            std::cout << n << ',' << smar::to_string(o) << '\n';
        } else {
            nlohmann::json j;
            j["argument"] = n;
            switch (o.kind) {
                case smar::OutcomeKind::found: j["value"] = o.value; break;
                case smar::OutcomeKind::not_found_within:
                    j["outcome"] = "not-found-within";
                    j["bound"] = o.bound;
                    break;
                case smar::OutcomeKind::provably_none:
                    j["outcome"] = "provably-none";
                    j["reason"] = o.reason;
                    break;
            }
            std::cout << j.dump() << '\n';
        }
    }
    return 0;
}

int run_verify(const std::string& table, bool all, const smar::VerifyBounds& bounds) {
    std::vector<smar::LedgerEntry> ledger =
        all ? smar::verify_all(bounds) : smar::verify_table(table, bounds);
    bool clean = true;
    for (const auto& e : ledger) {
        std::cout << smar::format_ledger_entry(e) << '\n';
        if (e.status != smar::LedgerStatus::confirmed) clean = false;
    }
    return clean ? 0 : 3;
}

int run_conjecture(const std::string& name, u64 limit, const std::string& checkpoint) {
    smar::Conjecture kind =
        name == "tutescu" ? smar::Conjecture::tutescu : smar::Conjecture::radu;
    smar::ScanProgress progress;
    if (!checkpoint.empty()) progress = smar::load_scan_checkpoint(checkpoint, kind);
    std::size_t reported = 0;
    auto emit = [&](const smar::ScanProgress& p) {
        for (; reported < p.solutions.size(); ++reported)
            std::cout << p.solutions[reported] << '\n';
    };
    emit(progress);
    smar::ScanCheckpointHook hook;
    if (!checkpoint.empty())
        hook = [&](const smar::ScanProgress& p) {
            smar::save_scan_checkpoint(checkpoint, kind, p);
            emit(p);
        };
    auto t0 = std::chrono::steady_clock::now();
    smar::ScanProgress result = kind == smar::Conjecture::tutescu
                                    ? smar::tutescu_scan_from(limit, progress, hook)
                                    : smar::radu_scan_from(limit, progress, hook);
    auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    emit(result);
    if (!checkpoint.empty()) smar::save_scan_checkpoint(checkpoint, kind, result);
    std::cout << "summary: " << result.solutions.size() << " solutions, limit " << limit
              << ", " << secs << " s\n";
    return 0;
}

int run_pi(u64 x) {
    u64 via_s = smar::prime_count_via_s(x);
    u64 via_sieve = smar::sieve_prime_count(x);
    bool agree = via_s == via_sieve;
    std::cout << via_s << ' ' << via_sieve << ' ' << (agree ? "agree" : "DISAGREE") << '\n';
    return agree ? 0 : 3;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Smarandache-type functions: evaluation, sequences, table audit, conjecture scans"};
    app.require_subcommand(1);

    Options opt;
    std::string data_dir;
    std::string format = "csv";
    app.add_option("--data-dir", data_dir, "directory with the paper table data files");

    std::string fn, table, conjecture_name, checkpoint;
    u64 arg = 0, from = 0, to = 0, limit = 1000000, pi_x = 0;
    bool verify_all_flag = false;

    auto* eval = app.add_subcommand("eval", "evaluate one function at one argument");
    eval->add_option("function", fn)->required();
    eval->add_option("argument", arg)->required();
    eval->add_option("--bound", opt.search_bound, "search bound (SK/SW, SI2/SI3 threshold)");
    eval->add_option("--prime-bound", opt.prime_bound, "SNTP primorial prime bound");
    eval->add_option("--k", opt.k, "order of the ceil function Sk");
    eval->add_option("--m", opt.m, "power for mpow-comp");

    auto* seq = app.add_subcommand("seq", "stream function values over a range");
    seq->add_option("function", fn)->required();
    seq->add_option("from", from)->required();
    seq->add_option("to", to)->required();
    seq->add_option("--format", format)->check(CLI::IsMember({"csv", "jsonl"}));
    seq->add_option("--bound", opt.search_bound);
    seq->add_option("--prime-bound", opt.prime_bound);
    seq->add_option("--k", opt.k);
    seq->add_option("--m", opt.m);

    auto* verify = app.add_subcommand("verify", "audit embedded paper tables against the definitions");
    verify->add_option("table", table, "table id");
    verify->add_flag("--all", verify_all_flag, "verify every embedded table");
    verify->add_option("--bound", opt.search_bound);
    verify->add_option("--prime-bound", opt.prime_bound);

    auto* conj = app.add_subcommand("conjecture", "bounded exhaustive scan for a conjecture");
    conj->add_option("name", conjecture_name)->required()->check(CLI::IsMember({"tutescu", "radu"}));
    conj->add_option("--limit", limit, "scan ceiling");
    conj->add_option("--checkpoint", checkpoint, "checkpoint file, resumed if present");

    auto* pi = app.add_subcommand("pi", "compare the S-based prime count with the sieve");
    pi->add_option("x", pi_x)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (!data_dir.empty()) smar::set_table_data_dir(data_dir);
        if (eval->parsed()) return run_eval(fn, arg, opt);
        if (seq->parsed()) return run_seq(fn, from, to, format, opt);
        if (verify->parsed()) {
            if (!verify_all_flag && table.empty()) {
                std::cerr << "error: give a table id or --all\n";
                return 1;
            }
            return run_verify(table, verify_all_flag, {opt.search_bound, opt.prime_bound});
        }
        if (conj->parsed()) {
            if (limit < 2) {
                std::cerr << "error: limit must be >= 2\n";
                return 1;
            }
            return run_conjecture(conjecture_name, limit, checkpoint);
        }
        if (pi->parsed()) return run_pi(pi_x);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
