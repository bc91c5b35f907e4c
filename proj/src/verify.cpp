#include "smar/verify.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "smar/classical.hpp"
#include "smar/parts.hpp"

#ifndef SMAR_DEFAULT_TABLE_DIR
#define SMAR_DEFAULT_TABLE_DIR "data/tables"
#endif

namespace smar {

namespace {

std::mutex g_table_mutex;
std::string g_data_dir = SMAR_DEFAULT_TABLE_DIR;
std::vector<PaperTable> g_tables;
bool g_loaded = false;

const char* const kTableFiles[] = {
    "s-1.csv",         "sdf-5.1.csv",     "sk-5.2.csv",   "sw-5.3.csv",
    "ceil2-5.4.csv",   "z-5.5.csv",       "sntp-5.6.csv", "isp-6.1a.csv",
    "ssp-6.1b.csv",    "iss-6.1c.csv",    "sss-6.1.csv",  "sqcomp-6.3a.csv",
    "cubcomp-6.3b.csv", "primecomp-6.3d.csv",
};

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

u64 parse_u64(const std::string& s) {
    u64 v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size())
        throw std::runtime_error("table parse error: bad integer '" + s + "'");
    return v;
}

PaperTable load_table_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open table file: " + path);
    PaperTable t;
    bool have_start = false;
    std::string line;
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty()) continue;
        if (line[0] == '#') {
            // header comments: "# key: value"
            auto body = trim(line.substr(1));
            auto colon = body.find(':');
            if (colon == std::string::npos) continue;
            auto key = trim(body.substr(0, colon));
            auto value = trim(body.substr(colon + 1));
            if (key == "table") t.id = value;
            else if (key == "source") t.source = value;
            else if (key == "start_index") {
                t.start_index = std::stoll(value);
                have_start = true;
            }
            continue;
        }
        auto comma = line.find(',');
        if (comma == std::string::npos)
            throw std::runtime_error("table parse error in " + path + ": '" + line + "'");
        auto arg = trim(line.substr(0, comma));
        auto exp = trim(line.substr(comma + 1));
        TableEntry e{parse_u64(arg), std::nullopt};
        if (exp != "?") e.expected = parse_u64(exp);
        t.entries.push_back(e);
    }
    if (t.id.empty() || !have_start || t.entries.empty())
        throw std::runtime_error("table file missing header or rows: " + path);
    return t;
}

// caller holds g_table_mutex
void load_tables() {
    if (g_loaded) return;
    g_tables.clear();
    for (const char* f : kTableFiles)
        g_tables.push_back(load_table_file(g_data_dir + "/" + f));
    g_loaded = true;
}

} // namespace

void set_table_data_dir(std::string dir) {
    std::lock_guard lock(g_table_mutex);
    g_data_dir = std::move(dir);
    g_loaded = false;
}

const std::string& table_data_dir() { return g_data_dir; }

const std::vector<PaperTable>& paper_tables() {
    std::lock_guard lock(g_table_mutex);
    load_tables();
    return g_tables;
}

const PaperTable& paper_table(const std::string& id) {
    for (const auto& t : paper_tables())
        if (t.id == id) return t;
    throw std::invalid_argument("unknown table id: " + id);
}

std::vector<std::string> table_ids() {
    std::vector<std::string> ids;
    for (const auto& t : paper_tables()) ids.push_back(t.id);
    return ids;
}

const char* to_string(LedgerStatus s) {
    switch (s) {
        case LedgerStatus::confirmed: return "confirmed";
        case LedgerStatus::mismatch: return "mismatch";
        case LedgerStatus::undecided: return "undecided";
    }
    return "?";
}

namespace {

std::function<SearchOutcome(u64)> table_evaluator(const std::string& id, const VerifyBounds& b) {
    auto value = [](auto fn) {
        return [fn](u64 n) { return SearchOutcome::found(fn(n)); };
    };
    if (id == "s-1") return value([](u64 n) { return s(n); });
    if (id == "sdf-5.1") return value([](u64 n) { return sdf(n); });
    if (id == "sk-5.2") return [b](u64 p) { return sk(p, b.search_bound); };
    if (id == "sw-5.3") return [b](u64 p) { return sw(p, b.search_bound); };
    if (id == "ceil2-5.4") return value([](u64 n) { return ceil_s(n, 2); });
    if (id == "z-5.5") return value([](u64 n) { return z(n); });
    if (id == "sntp-5.6") return [b](u64 n) { return sntp(n, b.prime_bound); };
    if (id == "isp-6.1a") return value(inferior_prime_part);
    if (id == "ssp-6.1b") return value(superior_prime_part);
    if (id == "iss-6.1c") return value(inferior_square_part);
    if (id == "sss-6.1") return value(superior_square_part);
    if (id == "sqcomp-6.3a") return value(square_complementary);
    if (id == "cubcomp-6.3b") return value(cubic_complementary);
    if (id == "primecomp-6.3d") return value(prime_complementary);
    throw std::invalid_argument("unknown table id: " + id);
}

LedgerStatus classify(const TableEntry& e, const SearchOutcome& computed) {
    if (!e.expected || computed.kind == OutcomeKind::not_found_within)
        return LedgerStatus::undecided;
    if (computed.kind == OutcomeKind::found && computed.value == *e.expected)
        return LedgerStatus::confirmed;
    return LedgerStatus::mismatch;
}

} // namespace

std::vector<LedgerEntry> verify_table(const std::string& id, const VerifyBounds& bounds) {
    const PaperTable& t = paper_table(id);
    auto eval = table_evaluator(id, bounds);
    std::vector<LedgerEntry> ledger;
    ledger.reserve(t.entries.size());
    for (const auto& e : t.entries) {
        SearchOutcome computed = eval(e.argument);
        ledger.push_back({t.id, e.argument, e.expected, computed, classify(e, computed)});
    }
    return ledger;
}

std::vector<LedgerEntry> verify_all(const VerifyBounds& bounds) {
    std::vector<LedgerEntry> ledger;
    for (const auto& id : table_ids()) {
        auto part = verify_table(id, bounds);
        ledger.insert(ledger.end(), part.begin(), part.end());
    }
    return ledger;
}

std::string format_ledger_entry(const LedgerEntry& e) {
    std::ostringstream os;
    os << e.table_id << ',' << e.argument << ','
       << (e.expected ? std::to_string(*e.expected) : std::string("?")) << ','
       << to_string(e.computed) << ',' << to_string(e.status);
    return os.str();
}

u64 sieve_prime_count(u64 x) {
    if (x > 100000000ull) throw std::domain_error("sieve_prime_count: x above sieve ceiling 10^8");
    if (x < 2) return 0;
    std::vector<bool> composite(x + 1, false);
    u64 count = 0;
    for (u64 i = 2; i <= x; ++i) {
        if (!composite[i]) {
            ++count;
            for (u64 j = i * i; j <= x; j += i) composite[j] = true;
        }
    }
    return count;
}

std::vector<u64> prime_count_table(u64 limit) {
    if (limit > 100000000ull) throw std::domain_error("prime_count_table: limit above sieve ceiling");
    std::vector<bool> composite(limit + 1, false);
    std::vector<u64> counts(limit + 1, 0);
    u64 count = 0;
    for (u64 i = 2; i <= limit; ++i) {
        if (!composite[i]) {
            ++count;
            for (u64 j = i * i; j <= limit; j += i) composite[j] = true;
        }
        counts[i] = count;
    }
    return counts;
}

const char* to_string(Conjecture c) {
    return c == Conjecture::tutescu ? "tutescu" : "radu";
}

namespace {

constexpr u64 kCheckpointStride = 100000;

ScanProgress scan_impl(Conjecture kind, u64 limit, ScanProgress progress,
                       const ScanCheckpointHook& hook) {
    if (limit < 2) throw std::domain_error("conjecture scan: limit must be >= 2");
    if (progress.next < 2) progress.next = 2;
    if (progress.next > limit) return progress;
    u64 lookahead = kind == Conjecture::tutescu ? 1 : 2;
    auto sv = s_values_up_to(limit + lookahead);
    for (u64 n = progress.next; n <= limit; ++n) {
        bool hit = kind == Conjecture::tutescu
                       ? sv[n] == sv[n + 1]
                       : sv[n] + sv[n + 1] == sv[n + 2];
        if (hit) {
            if (kind == Conjecture::radu) {
                // independent re-verification before inclusion
                if (s_oracle(n) + s_oracle(n + 1) != s_oracle(n + 2))
                    throw std::logic_error("radu scan: fast path disagrees with oracle");
            }
            progress.solutions.push_back(n);
        }
        progress.next = n + 1;
        if (hook && progress.next % kCheckpointStride == 0) hook(progress);
    }
    return progress;
}

} // namespace

ScanProgress tutescu_scan_from(u64 limit, ScanProgress progress, const ScanCheckpointHook& hook) {
    return scan_impl(Conjecture::tutescu, limit, std::move(progress), hook);
}

std::vector<u64> tutescu_scan(u64 limit) {
    return tutescu_scan_from(limit, {}).solutions;
}

ScanProgress radu_scan_from(u64 limit, ScanProgress progress, const ScanCheckpointHook& hook) {
    return scan_impl(Conjecture::radu, limit, std::move(progress), hook);
}

std::vector<u64> radu_scan(u64 limit) {
    return radu_scan_from(limit, {}).solutions;
}

ScanProgress load_scan_checkpoint(const std::string& path, Conjecture expected_kind) {
    std::ifstream in(path);
    if (!in) return {};
    std::string kind;
    ScanProgress p;
    if (!(in >> kind >> p.next)) return {};
    if (kind != to_string(expected_kind))
        throw std::runtime_error("checkpoint file belongs to conjecture '" + kind + "'");
    u64 n;
    while (in >> n) p.solutions.push_back(n);
    return p;
}

void save_scan_checkpoint(const std::string& path, Conjecture kind, const ScanProgress& p) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write checkpoint file: " + path);
    out << to_string(kind) << ' ' << p.next << '\n';
    for (u64 n : p.solutions) out << n << '\n';
}

} // namespace smar
