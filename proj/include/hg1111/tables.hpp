#pragma once

#include "hg1111/classify.hpp"

namespace hg {

struct TableRow {
    int index;
    std::vector<Rat> alpha, beta;
    std::vector<int> gamma_red;
    Int D, E;
    std::string form_label;  // empty when the paper leaves it unidentified
    int twist_partner;
};

std::vector<TableRow> load_tables(const std::string& path);

// Compare a computed classification against the reference rows; returns a
// list of human-readable mismatches (empty = exact match).
std::vector<std::string> diff_against_tables(const std::vector<CaseRecord>& recs,
                                             const std::vector<TableRow>& rows);

}  // namespace hg
