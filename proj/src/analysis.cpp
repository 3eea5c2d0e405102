#include "wimax/analysis.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"
#include "wimax/floorless.hpp"
#include "wimax/oracle.hpp"

namespace wimax {

namespace {

nlohmann::json params_json(const InterleaverParams& p) {
    return {{"modulation", to_string(p.modulation())},
            {"ncpbs", p.ncpbs()},
            {"d", p.rows()}};
}

}  // namespace

EquivalenceReport compare_sequences(const AddressSequence& oracle,
                                    const AddressSequence& candidate) {
    if (oracle.size() != candidate.size()) {
        throw InterleaverError(Errc::LengthMismatch,
                               "cannot compare sequences of different length");
    }
    EquivalenceReport report{oracle.params(), static_cast<uint32_t>(oracle.size()), {}};
    for (uint32_t n = 0; n < oracle.size(); ++n) {
        if (oracle[n] != candidate[n]) {
            report.mismatches.push_back({n, oracle[n], candidate[n]});
        }
    }
    return report;
}

EquivalenceReport verify_equivalence(const InterleaverParams& p) {
    // The oracle route stays on the scalar Eq (3)/(4) path on purpose: the
    // comparison is floor-based math vs. the counter machine, nothing else.
    const AddressSequence oracle =
        build_sequence(p, Direction::Deinterleave, kernels::Level::Scalar);
    return compare_sequences(oracle, generate_all(p));
}

std::string to_json(const EquivalenceReport& report) {
    nlohmann::json j = params_json(report.params);
    j["total_indices"] = report.total_indices;
    auto arr = nlohmann::json::array();
    for (const auto& m : report.mismatches) {
        arr.push_back({{"index", m.index},
                       {"oracle_address", m.oracle_address},
                       {"floorless_address", m.floorless_address}});
    }
    j["mismatches"] = arr;
    j["passed"] = report.passed();
    return j.dump(2);
}

DispersionReport burst_dispersion(const InterleaverParams& p, uint32_t burst_start,
                                  uint32_t burst_len) {
    if (burst_len == 0) {
        throw InterleaverError(Errc::BadBurst, "burst length must be at least 1");
    }
    if (burst_len > p.ncpbs()) {
        throw InterleaverError(Errc::BurstTooLong,
                               "burst of " + std::to_string(burst_len) +
                                   " bits exceeds the block size " +
                                   std::to_string(p.ncpbs()));
    }
    burst_start %= p.ncpbs();

    DispersionReport report{p, burst_start, burst_len, {}, 1, 0};
    report.positions.reserve(burst_len);
    uint32_t n = burst_start;
    for (uint32_t t = 0; t < burst_len; ++t) {
        report.positions.push_back(deinterleaver_address(p, n));
        if (++n == p.ncpbs()) n = 0;  // burst wraps inside the block
    }
    std::sort(report.positions.begin(), report.positions.end());

    uint32_t run = 1;
    uint32_t min_gap = 0;
    for (size_t i = 1; i < report.positions.size(); ++i) {
        const uint32_t gap = report.positions[i] - report.positions[i - 1];
        run = (gap == 1) ? run + 1 : 1;
        report.max_run = std::max(report.max_run, run);
        if (min_gap == 0 || gap < min_gap) min_gap = gap;
    }
    report.min_gap = min_gap;
    return report;
}

std::string to_json(const DispersionReport& report) {
    nlohmann::json j = params_json(report.params);
    j["burst_start"] = report.burst_start;
    j["burst_len"] = report.burst_len;
    j["positions"] = report.positions;
    j["max_run"] = report.max_run;
    j["min_gap"] = report.min_gap;
    return j.dump(2);
}

AddressTable emit_address_table(const InterleaverParams& p, uint32_t num_rows,
                                uint32_t num_cols) {
    if (num_rows > p.rows() || num_cols > p.columns()) {
        throw InterleaverError(Errc::DimensionTooLarge,
                               "requested " + std::to_string(num_rows) + "x" +
                                   std::to_string(num_cols) + " of a " +
                                   std::to_string(p.rows()) + "x" +
                                   std::to_string(p.columns()) + " table");
    }
    AddressTable table(num_rows, std::vector<uint32_t>(num_cols));
    for (uint32_t j = 0; j < num_rows; ++j) {
        for (uint32_t i = 0; i < num_cols; ++i) {
            table[j][i] = deinterleaver_address(p, j * p.columns() + i);
        }
    }
    return table;
}

std::string format_address_table(const InterleaverParams& p, const AddressTable& table,
                                 TableFormat format) {
    std::ostringstream os;
    if (format == TableFormat::Csv) {
        os << to_string(p.modulation()) << ',' << p.ncpbs() << ',' << p.rows() << '\n';
        for (const auto& row : table) {
            for (size_t i = 0; i < row.size(); ++i) {
                if (i) os << ',';
                os << row[i];
            }
            os << '\n';
        }
        return os.str();
    }

    os << "# " << to_string(p.modulation()) << " ncpbs=" << p.ncpbs() << " d=" << p.rows()
       << '\n';
    size_t width = std::to_string(p.ncpbs() - 1).size();
    for (const auto& row : table) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) os << ' ';
            std::string cell = std::to_string(row[i]);
            os << std::string(width > cell.size() ? width - cell.size() : 0, ' ') << cell;
        }
        os << '\n';
    }
    return os.str();
}

std::vector<DepthSweepEntry> sweep_depths(uint32_t max_ncpbs, uint32_t d) {
    if (d != 12 && d != 16) {
        throw InterleaverError(Errc::BadRowCount,
                               "row count d must be 12 or 16, got " + std::to_string(d));
    }
    std::vector<DepthSweepEntry> entries;
    for (Modulation m : {Modulation::Qpsk, Modulation::Qam16, Modulation::Qam64}) {
        DepthSweepEntry entry{m, {}};
        const uint32_t stride = d * permutation_step(m);
        for (uint32_t n = stride; n <= max_ncpbs; n += stride) entry.valid_ncpbs.push_back(n);
        entries.push_back(std::move(entry));
    }
    return entries;
}

}  // namespace wimax
