#ifndef NILSLICE_CAMPAIGN_HPP
#define NILSLICE_CAMPAIGN_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nilslice/slices.hpp"

namespace nilslice {

enum class Command { Charpoly, JM, Lambda, Transversality, Kleinian, Embedding, Smoothness, All };

std::string command_name(Command c);

/// The seed fully determines every sampled coordinate: each (cell, check)
/// pair owns an independent splitmix64 stream keyed by FNV-1a over its
/// textual id, so results are independent of execution order and thread
/// count.
struct CampaignConfig {
    Command command = Command::All;
    std::optional<AlgebraKind> kind;
    std::optional<int> m;
    std::optional<int> n;
    int m_max = 6;
    int samples = 25;
    std::uint64_t seed = 1;
    double tol = 1e-9;
    int threads = 0;  // 0: NILSLICE_THREADS env var, else 1
};

struct CellResult {
    std::string check;
    AlgebraKind kind;
    int m = 0, n = 0;
    bool pass = false;
    int samples_run = 0;
    int skipped = 0;
    double max_residual = 0.0;
    std::string detail;
    double seconds = 0.0;
};

struct Report {
    int schema_version = 1;
    CampaignConfig config;
    std::vector<CellResult> cells;
    bool all_pass = false;
    double seconds = 0.0;
};

Report run_campaign(const CampaignConfig& cfg);

/// include_timings = false zeroes the timing fields (for golden-file and
/// determinism comparisons).
std::string report_to_json(const Report& rep, bool include_timings = true);
std::string report_to_text(const Report& rep);

/// All valid (kind, m, n) cells with m <= m_max, optionally filtered.
std::vector<OrbitIndex> enumerate_cells(const CampaignConfig& cfg, int m_min = 1);

}  // namespace nilslice

#endif
