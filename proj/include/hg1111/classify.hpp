#pragma once

#include "hg1111/conifold.hpp"
#include "hg1111/gamma.hpp"
#include "hg1111/hodge.hpp"

namespace hg {

struct CaseRecord {
    int index = 0;  // 1..47
    HGParams params;
    GammaVector gamma_red;
    bool mum = false;
    Int D = 1;             // discriminant of the conifold quadratic field
    Int E = 1;             // twist discriminant
    int twist_partner = 0;  // index (self for self-twist cases)
    std::string form_label;  // empty when unidentified
};

// All pairs (q_inf, q_0) of degree-4 cyclotomic products with no shared
// factor, as parameters, deduplicated under alpha <-> beta exchange.
std::vector<HGParams> enumerate_candidates();

// The 47 rank-4 cases with Hodge vector (1,1,1,1), in table order.  Aborts
// (logic_error) if the census does not come out to 47/14.
std::vector<CaseRecord> classify_all();

enum class TableFormat { Csv, Json, Markdown };
std::string emit_tables(const std::vector<CaseRecord>& recs, TableFormat fmt);

}  // namespace hg
