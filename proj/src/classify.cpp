#include "hg1111/classify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

namespace hg {

namespace {

using Orders = std::vector<unsigned>;  // sorted cyclotomic index multiset

const unsigned kIndices[] = {1, 2, 3, 4, 5, 6, 8, 10, 12};  // phi(n) <= 4

std::vector<Orders> degree4_products() {
    std::vector<Orders> out;
    Orders cur;
    auto rec = [&](auto&& self, size_t from, unsigned deg) -> void {
        if (deg == 4) {
            out.push_back(cur);
            return;
        }
        for (size_t i = from; i < std::size(kIndices); i++) {
            unsigned n = kIndices[i];
            unsigned d = (unsigned)euler_phi(n);
            if (deg + d > 4) continue;
            cur.push_back(n);
            self(self, i, deg + d);
            cur.pop_back();
        }
    };
    rec(rec, 0, 0);
    return out;
}

bool disjoint(const Orders& a, const Orders& b) {
    for (unsigned x : a)
        for (unsigned y : b)
            if (x == y) return false;
    return true;
}

// Table ordering on index multisets: longer first, then lexicographic.
bool key_less(const Orders& a, const Orders& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
}

struct PairClass {
    Orders a, b;  // unordered; stored with a = min side under key_less
    bool operator<(const PairClass& o) const {
        if (a != o.a) return key_less(a, o.a);
        return key_less(b, o.b);
    }
    bool operator==(const PairClass& o) const = default;
};

PairClass make_class(Orders x, Orders y) {
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    if (key_less(y, x)) std::swap(x, y);
    return {x, y};
}

Orders orders_of_side(const std::vector<Rat>& side) {
    HGParams tmp(side, side);
    auto prof = cyclo_profile(tmp);
    return prof->numerator_orders;
}

bool is_all(const Orders& o, unsigned n) {
    return o.size() == 4 && std::all_of(o.begin(), o.end(), [&](unsigned x) { return x == n; });
}

}  // namespace

std::vector<HGParams> enumerate_candidates() {
    auto prods = degree4_products();
    std::set<PairClass> seen;
    std::vector<HGParams> out;
    for (auto& qa : prods) {
        for (auto& qb : prods) {
            if (!disjoint(qa, qb)) continue;
            auto cls = make_class(qa, qb);
            if (!seen.insert(cls).second) continue;
            // keep the beta = 0 representative when one exists
            if (is_all(cls.b, 1)) {
                out.push_back(params_from_profile(cls.a, cls.b));
            } else if (is_all(cls.a, 1)) {
                out.push_back(params_from_profile(cls.b, cls.a));
            } else {
                out.push_back(params_from_profile(cls.a, cls.b));
            }
        }
    }
    return out;
}

std::vector<CaseRecord> classify_all() {
    auto prods = degree4_products();
    std::set<PairClass> classes;
    for (auto& qa : prods)
        for (auto& qb : prods) {
            if (!disjoint(qa, qb)) continue;
            auto cls = make_class(qa, qb);
            HGParams p = params_from_profile(cls.a, cls.b);
            if (hodge_vector(p).h != std::vector<int>{1, 1, 1, 1}) continue;
            classes.insert(cls);
        }

    // twist mate of a class, as a class
    auto twist_of = [&](const PairClass& c) {
        HGParams t = total_twist_params(params_from_profile(c.a, c.b));
        return make_class(orders_of_side(t.alpha), orders_of_side(t.beta));
    };

    struct Oriented {
        Orders alpha, beta;
        PairClass cls;
    };
    std::vector<Oriented> order;                 // final table order
    std::map<PairClass, int> index_of;           // class -> 1-based index
    std::vector<std::pair<int, int>> partner_links;

    // MUM block: beta = {1,1,1,1}; sorted by alpha key
    std::vector<PairClass> mums, others;
    for (auto& c : classes) {
        if (is_all(c.a, 1) || is_all(c.b, 1))
            mums.push_back(c);
        else
            others.push_back(c);
    }
    std::vector<Oriented> mum_oriented;
    for (auto& c : mums) {
        Orders beta = is_all(c.a, 1) ? c.a : c.b;
        Orders alpha = is_all(c.a, 1) ? c.b : c.a;
        mum_oriented.push_back({alpha, beta, c});
    }
    std::sort(mum_oriented.begin(), mum_oriented.end(),
              [](const Oriented& x, const Oriented& y) { return key_less(x.alpha, y.alpha); });
    for (auto& m : mum_oriented) {
        order.push_back(m);
        index_of[m.cls] = (int)order.size();
    }

    // twists of MUM cases, in partner order, orientation inherited entrywise
    for (auto& m : mum_oriented) {
        HGParams t = total_twist_params(params_from_profile(m.alpha, m.beta));
        auto cls = make_class(orders_of_side(t.alpha), orders_of_side(t.beta));
        if (index_of.count(cls)) continue;  // self-twist (case 1)
        order.push_back({orders_of_side(t.alpha), orders_of_side(t.beta), cls});
        index_of[cls] = (int)order.size();
    }

    // remaining: base rows carry the smaller min-side key within their twist
    // pair; their twists follow in partner order
    std::vector<Oriented> base;
    for (auto& c : others) {
        if (index_of.count(c)) continue;
        auto mate = twist_of(c);
        bool is_base = (mate == c) || key_less(c.a, mate.a);
        if (is_base) base.push_back({c.a, c.b, c});
    }
    std::sort(base.begin(), base.end(), [](const Oriented& x, const Oriented& y) {
        if (x.alpha != y.alpha) return key_less(x.alpha, y.alpha);
        return key_less(x.beta, y.beta);
    });
    for (auto& b : base) {
        order.push_back(b);
        index_of[b.cls] = (int)order.size();
    }
    for (auto& b : base) {
        HGParams t = total_twist_params(params_from_profile(b.alpha, b.beta));
        auto cls = make_class(orders_of_side(t.alpha), orders_of_side(t.beta));
        if (index_of.count(cls)) continue;  // self-twist (cases 30, 37)
        order.push_back({orders_of_side(t.alpha), orders_of_side(t.beta), cls});
        index_of[cls] = (int)order.size();
    }

    if (order.size() != 47 || mum_oriented.size() != 14)
        throw std::logic_error("classification census mismatch: " + std::to_string(order.size()) +
                               " cases, " + std::to_string(mum_oriented.size()) + " MUM");

    std::vector<CaseRecord> recs;
    for (size_t i = 0; i < order.size(); i++) {
        CaseRecord r;
        r.index = (int)i + 1;
        r.params = params_from_profile(order[i].alpha, order[i].beta);
        r.gamma_red = gamma_from_params(r.params);
        r.mum = is_mum(r.params);
        r.D = disc_field(r.gamma_red);
        r.E = twist_disc(r.gamma_red);
        auto mate = twist_of(order[i].cls);
        r.twist_partner = index_of.at(mate);
        recs.push_back(std::move(r));
    }
    for (auto& r : recs) {
        if (recs[r.twist_partner - 1].twist_partner != r.index)
            throw std::logic_error("twist pairing is not an involution");
    }
    return recs;
}

std::string emit_tables(const std::vector<CaseRecord>& recs, TableFormat fmt) {
    auto alpha_s = [](const CaseRecord& r) {
        std::string s;
        for (auto& x : r.params.alpha) s += (s.empty() ? "" : ",") + rat_str(x);
        return s;
    };
    auto beta_s = [](const CaseRecord& r) {
        std::string s;
        for (auto& x : r.params.beta) s += (s.empty() ? "" : ",") + rat_str(x);
        return s;
    };
    std::ostringstream os;
    switch (fmt) {
        case TableFormat::Csv: {
            os << "index,alpha,beta,gamma_red,D,f,E,twist_partner,mum\n";
            for (auto& r : recs)
                os << r.index << ",\"" << alpha_s(r) << "\",\"" << beta_s(r) << "\",\""
                   << r.gamma_red.display() << "\"," << r.D << "," << r.form_label << "," << r.E
                   << "," << r.twist_partner << "," << (r.mum ? 1 : 0) << "\n";
            break;
        }
        case TableFormat::Json: {
            nlohmann::json arr = nlohmann::json::array();
            for (auto& r : recs) {
                nlohmann::json j;
                j["index"] = r.index;
                j["alpha"] = params_to_strings(r.params.alpha);
                j["beta"] = params_to_strings(r.params.beta);
                j["gamma_red"] = r.gamma_red.entries;
                j["mum"] = r.mum;
                j["D"] = r.D.convert_to<long long>();
                j["E"] = r.E.convert_to<long long>();
                j["twist_partner"] = r.twist_partner;
                if (r.form_label.empty())
                    j["form_label"] = nullptr;
                else
                    j["form_label"] = r.form_label;
                arr.push_back(j);
            }
            os << arr.dump(2) << "\n";
            break;
        }
        case TableFormat::Markdown: {
            os << "| n | alpha | beta | gamma^red | D | f | E | twist |\n";
            os << "|---|-------|------|-----------|---|---|---|-------|\n";
            for (auto& r : recs)
                os << "| " << r.index << " | " << alpha_s(r) << " | " << beta_s(r) << " | "
                   << r.gamma_red.display() << " | " << r.D << " | " << r.form_label << " | "
                   << r.E << " | " << r.twist_partner << " |\n";
            break;
        }
    }
    return os.str();
}

}  // namespace hg
