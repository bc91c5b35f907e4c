#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "smar/variants.hpp"

namespace smar {

struct TableEntry {
    u64 argument;
    std::optional<u64> expected; // nullopt encodes the paper's "?"
};

struct PaperTable {
    std::string id;
    long long start_index;
    std::string source;
    std::vector<TableEntry> entries;
};

// Directory holding the table data files; defaults to the build-time path.
void set_table_data_dir(std::string dir);
const std::string& table_data_dir();

const std::vector<PaperTable>& paper_tables();
const PaperTable& paper_table(const std::string& id); // throws on unknown id
std::vector<std::string> table_ids();

enum class LedgerStatus { confirmed, mismatch, undecided };

const char* to_string(LedgerStatus s);

struct LedgerEntry {
    std::string table_id;
    u64 argument;
    std::optional<u64> expected;
    SearchOutcome computed;
    LedgerStatus status;
};

struct VerifyBounds {
    u64 search_bound = kDefaultSearchBound; // SK/SW
    u64 prime_bound = kDefaultPrimeBound;   // SNTP
};

std::vector<LedgerEntry> verify_table(const std::string& id, const VerifyBounds& bounds = {});
std::vector<LedgerEntry> verify_all(const VerifyBounds& bounds = {});

// table-id,argument,expected,computed,status
std::string format_ledger_entry(const LedgerEntry& e);

u64 sieve_prime_count(u64 x); // x <= 10^8

// counts[x] = pi(x) for x in [0, limit]
std::vector<u64> prime_count_table(u64 limit);

// Conjecture scans.  Progress is reported at every multiple of 10^5 so a
// caller can checkpoint; `next` is the first unscanned n.
struct ScanProgress {
    u64 next = 2;
    std::vector<u64> solutions;
};

enum class Conjecture { tutescu, radu };

const char* to_string(Conjecture c);

using ScanCheckpointHook = std::function<void(const ScanProgress&)>;

// Every n in [progress.next, limit] with S(n) = S(n+1).
ScanProgress tutescu_scan_from(u64 limit, ScanProgress progress, const ScanCheckpointHook& hook = {});
std::vector<u64> tutescu_scan(u64 limit);

// Every n in [progress.next, limit] with S(n) + S(n+1) = S(n+2), each
// solution re-verified through the definition-literal oracle.
ScanProgress radu_scan_from(u64 limit, ScanProgress progress, const ScanCheckpointHook& hook = {});
std::vector<u64> radu_scan(u64 limit);

ScanProgress load_scan_checkpoint(const std::string& path, Conjecture expected_kind);
void save_scan_checkpoint(const std::string& path, Conjecture kind, const ScanProgress& p);

} // namespace smar
