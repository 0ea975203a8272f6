#include "hg1111/tables.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace hg {

std::vector<TableRow> load_tables(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    nlohmann::json j;
    in >> j;
    std::vector<TableRow> rows;
    for (auto& c : j.at("cases")) {
        TableRow r;
        r.index = c.at("index").get<int>();
        for (auto& s : c.at("alpha")) r.alpha.push_back(parse_rat(s.get<std::string>()));
        for (auto& s : c.at("beta")) r.beta.push_back(parse_rat(s.get<std::string>()));
        for (auto& x : c.at("gamma_red")) r.gamma_red.push_back(x.get<int>());
        r.D = Int(c.at("D").get<long long>());
        r.E = Int(c.at("E").get<long long>());
        if (!c.at("f").is_null()) r.form_label = c.at("f").get<std::string>();
        r.twist_partner = c.at("twist").get<int>();
        rows.push_back(std::move(r));
    }
    return rows;
}

std::vector<std::string> diff_against_tables(const std::vector<CaseRecord>& recs,
                                             const std::vector<TableRow>& rows) {
    std::vector<std::string> diffs;
    if (recs.size() != rows.size()) {
        diffs.push_back("case count " + std::to_string(recs.size()) + " != " +
                        std::to_string(rows.size()));
        return diffs;
    }
    for (size_t i = 0; i < rows.size(); i++) {
        auto& r = recs[i];
        auto& t = rows[i];
        std::ostringstream why;
        if (r.index != t.index) why << " index";
        if (r.params.alpha != t.alpha) why << " alpha";
        if (r.params.beta != t.beta) why << " beta";
        if (r.gamma_red.entries != t.gamma_red) why << " gamma";
        if (r.D != t.D) why << " D";
        if (r.E != t.E) why << " E";
        if (r.twist_partner != t.twist_partner) why << " twist";
        if (!why.str().empty())
            diffs.push_back("case " + std::to_string(t.index) + ": mismatch in" + why.str());
    }
    return diffs;
}

}  // namespace hg
