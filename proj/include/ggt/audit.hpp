#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ggt/coset.hpp"
#include "ggt/garside.hpp"
#include "ggt/reps.hpp"

namespace ggt::audit {

struct Options {
    std::size_t cap = coset::kDefaultCap;
    garside::Convention conjugation = garside::Convention::left;
    reps::Composition composition = reps::Composition::right_to_left;
};

struct Entry {
    std::string id;
    std::string claim;
    std::string status;   // pass | fail | inconclusive | resolved:<verdict>
    std::string witness;  // JSON
    double wall_ms = 0;
};

struct Report {
    Options options;
    std::vector<Entry> entries;  // ordered by id

    /// 0 all pass, 1 any fail, 2 any inconclusive (and no fail).
    int exit_code() const;
    /// With `timing` false the output is byte-identical across runs.
    std::string json(bool timing = true) const;
    std::string text() const;
};

/// Every check id, sorted.
std::vector<std::string> check_ids();

/// Runs the selected checks (all of them when `selection` holds "all").
/// Unknown ids throw Error(unknown_name).
Report run(const std::vector<std::string>& selection, const Options& options = {});

Report parse_report(const std::string& json);

/// Named exportable objects: graph fixtures, the complexes x1bar and ybar1,
/// the coset table g1-table and the full audit report.
std::vector<std::string> export_ids();
/// Serialization of an object in dot, json or text.
std::string export_object(const std::string& id, const std::string& format);
void export_to_file(const std::string& id, const std::string& format, const std::string& path);

}  // namespace ggt::audit
