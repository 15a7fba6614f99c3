#include "uqcas/coideal.hpp"

#include "intlattice.hpp"

#include <atomic>
#include <functional>
#include <mutex>
#include <optional>
#include <set>
#include <stdexcept>
#include <thread>

namespace uqcas {

namespace {

struct SweepTask {
    WeylElt w;
    std::vector<int> support_simples;
};

std::vector<SweepTask> sweep_tasks(const RootDatum& D, bool include_empty) {
    std::vector<SweepTask> tasks;
    for (const auto& w : all_weyl_elements(D))
        for (const auto& simples : valid_supports(w)) {
            if (simples.empty() && !include_empty) continue;
            tasks.push_back({w, simples});
        }
    return tasks;
}

std::vector<RootVec> orthogonal_complement(const RootDatum& D,
                                           const std::vector<RootVec>& support) {
    const int n = D.rank();
    const int reach = 4;
    std::vector<RootVec> members;
    RootVec v(n, -reach);
    while (true) {
        bool ok = true;
        for (const auto& beta : support)
            if (D.bilin(v, beta) != 0) ok = false;
        if (ok && !detail::all_zero(v)) members.push_back(v);
        int t = 0;
        while (t < n && v[t] == reach) v[t++] = -reach;
        if (t == n) break;
        ++v[t];
    }
    return detail::IntLattice(members, n).rows();
}

} // namespace

std::vector<SweepCase> graded_sweep(const UqAlgebra& U, const SweepOptions& opt) {
    const RootDatum& D = U.datum();
    std::vector<SweepTask> tasks = sweep_tasks(D, opt.include_empty_support);
    const int total = static_cast<int>(tasks.size());

    std::vector<std::optional<SweepCase>> results(tasks.size());
    std::atomic<size_t> next{0};
    std::atomic<int> done{0};
    std::mutex progress_mutex;
    std::exception_ptr first_error;
    std::mutex error_mutex;

    auto run_task = [&](const UqAlgebra& A, size_t idx) {
        const SweepTask& t = tasks[idx];
        Character phi = Character::on_simples(t.w, t.support_simples);
        results[idx].emplace(graded_algebra(A, phi), t.support_simples);
        int d = ++done;
        if (opt.progress) {
            std::lock_guard<std::mutex> lock(progress_mutex);
            opt.progress(d, total);
        }
    };

    int jobs = std::max(1, opt.jobs);
    if (jobs == 1) {
        for (size_t idx = 0; idx < tasks.size(); ++idx) run_task(U, idx);
    } else {
        auto worker = [&]() {
            UqAlgebra A(D);
            while (true) {
                size_t idx = next.fetch_add(1);
                if (idx >= tasks.size()) break;
                try {
                    run_task(A, idx);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!first_error) first_error = std::current_exception();
                }
            }
        };
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
        if (first_error) std::rethrow_exception(first_error);
    }

    std::vector<SweepCase> out;
    out.reserve(results.size());
    for (auto& r : results) out.push_back(std::move(*r));
    return out;
}

std::vector<BorelCandidate> borel_candidates(const UqAlgebra& U) {
    const RootDatum& D = U.datum();
    std::vector<WeylElt> W = all_weyl_elements(D);
    WeylElt w0 = longest_element(D);

    std::vector<std::vector<RootVec>> supports;
    {
        const auto& pos = D.pos_roots();
        std::vector<RootVec> current;
        std::function<void(size_t)> rec = [&](size_t from) {
            supports.push_back(current);
            for (size_t i = from; i < pos.size(); ++i) {
                bool ok = true;
                for (const auto& beta : current)
                    if (D.bilin(pos[i], beta) != 0) ok = false;
                if (!ok) continue;
                current.push_back(pos[i]);
                rec(i + 1);
                current.pop_back();
            }
        };
        rec(0);
        std::sort(supports.begin(), supports.end(),
                  [](const auto& a, const auto& b) {
                      if (a.size() != b.size()) return a.size() < b.size();
                      return a < b;
                  });
    }

    std::vector<BorelCandidate> out;
    for (const auto& supp : supports) {
        std::vector<RootVec> lattice = orthogonal_complement(D, supp);
        for (const auto& wm : W) {
            std::set<RootVec> inv;
            for (int idx : wm.phi_plus()) inv.insert(D.pos_root(idx));
            bool inside = true;
            for (const auto& beta : supp)
                if (!inv.count(beta)) inside = false;
            if (!inside) continue;
            if (!character_supportable(U, wm, supp, Side::FMinus)) continue;

            WeylElt wmp = reflected_quotient(wm, supp);
            WeylElt wp = wmp * w0;
            if (wmp.length() + wp.length() != w0.length()) continue;

            std::set<RootVec> pinv;
            for (int idx : wp.phi_plus()) pinv.insert(D.pos_root(idx));
            bool pinside = true;
            for (const auto& beta : supp)
                if (!pinv.count(beta)) pinside = false;
            if (!pinside) continue;
            if (!character_supportable(U, wp, supp, Side::EPlusAntipode)) continue;

            BorelCandidate cand(wm, wp, wmp);
            cand.support = supp;
            cand.lattice = lattice;
            if (supp.empty()) {
                cand.family = "homogeneous";
            } else {
                WeylElt refl(&D);
                for (const auto& beta : supp)
                    refl = refl * WeylElt::root_reflection(D, beta);
                cand.family = (wm == refl && wp == refl) ? "sl2-pair" : "other";
            }
            out.push_back(std::move(cand));
        }
    }
    return out;
}

} // namespace uqcas
