#include "hg1111/lmfdb.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>

#include "json.hpp"

#include <chrono>
#include <thread>

#include "httplib.h"

namespace hg {

long long NewformRecord::parse_level() const {
    auto dot = label.find('.');
    if (dot == std::string::npos) throw std::runtime_error("bad label " + label);
    return std::stoll(label.substr(0, dot));
}

LmfdbClient::LmfdbClient(LmfdbConfig cfg) : cfg_(std::move(cfg)) {}

std::optional<std::vector<NewformRecord>> LmfdbClient::load_level_file(long long level) {
    std::filesystem::path p = std::filesystem::path(cfg_.cache_dir) /
                              ("level_" + std::to_string(level) + ".json");
    std::ifstream in(p);
    if (!in) return std::nullopt;
    nlohmann::json j;
    in >> j;
    std::vector<NewformRecord> out;
    for (auto& f : j.at("forms")) {
        NewformRecord r;
        r.label = f.at("label").get<std::string>();
        r.level = f.at("level").get<long long>();
        r.weight = f.at("weight").get<int>();
        for (auto& [k, v] : f.at("ap").items()) r.ap[std::stoll(k)] = v.get<long long>();
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<NewformRecord> LmfdbClient::fetch_newforms(long long level) {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = cache_.find(level);
    if (it != cache_.end()) return it->second;
    if (auto rec = load_level_file(level)) {
        cache_[level] = *rec;
        return *rec;
    }
    if (cfg_.base_url.empty()) {
        // offline with no fixture: treat as no known forms at this level
        cache_[level] = {};
        return {};
    }
    // network path: the remote serves the same JSON schema as the fixture
    // files; one polite retry, responses are written through to the cache dir
    std::string body;
    for (int attempt = 0; attempt < 2; attempt++) {
        if (attempt || requests_)
            std::this_thread::sleep_for(std::chrono::milliseconds(cfg_.request_delay_ms));
        requests_++;
        httplib::Client cli(cfg_.base_url);
        auto res = cli.Get("/level_" + std::to_string(level) + ".json");
        if (res && res->status == 200) {
            body = res->body;
            break;
        }
        if (res && res->status == 404) {
            cache_[level] = {};
            return {};
        }
    }
    if (body.empty())
        throw std::runtime_error("lmfdb: network fetch failed for level " +
                                 std::to_string(level));
    std::filesystem::create_directories(cfg_.cache_dir);
    std::ofstream out(std::filesystem::path(cfg_.cache_dir) /
                      ("level_" + std::to_string(level) + ".json"));
    out << body;
    out.close();
    auto rec = load_level_file(level);
    cache_[level] = rec ? *rec : std::vector<NewformRecord>{};
    return cache_[level];
}

std::vector<long long> candidate_levels(const std::vector<long long>& primes, long long bound) {
    std::vector<long long> out = {1};
    for (long long p : primes) {
        std::vector<long long> next;
        for (long long base : out) {
            long long v = base;
            while (v <= bound) {
                next.push_back(v);
                if (v > bound / p) break;
                v *= p;
            }
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        out = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<long long> prime_support(const GammaVector& g) {
    std::set<long long> s;
    for (int x : g.entries) {
        long long v = std::abs(x);
        for (long long p = 2; p * p <= v; p++)
            while (v % p == 0) {
                s.insert(p);
                v /= p;
            }
        if (v > 1) s.insert(v);
    }
    return {s.begin(), s.end()};
}

LmfdbClient::MatchResult LmfdbClient::match_form(const std::vector<EulerFactorData>& aps,
                                                 const std::vector<long long>& support_primes) {
    std::vector<std::pair<long long, long long>> coeffs;
    for (auto& d : aps)
        if (d.good) coeffs.push_back({d.p, d.a_p});
    if (coeffs.size() < 5) throw std::domain_error("match_form: need at least 5 good primes");

    MatchResult res;
    for (long long level : candidate_levels(support_primes, cfg_.level_bound)) {
        for (auto& f : fetch_newforms(level)) {
            bool ok = true;
            for (auto& [p, a] : coeffs) {
                if (level % p == 0) continue;  // only compare at good primes of the form
                auto it = f.ap.find(p);
                if (it == f.ap.end()) continue;
                if (it->second != a) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            if (res.form && res.form->label != f.label) {
                res.ambiguous = true;
                return res;
            }
            res.form = f;
        }
    }
    return res;
}

}  // namespace hg
