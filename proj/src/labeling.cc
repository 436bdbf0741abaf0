// Copyright 2026 The qconv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qconv/labeling.h"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>

namespace qconv {

namespace {

using Cells = std::vector<std::vector<size_t>>;

class Labeler {
   public:
    explicit Labeler(const LabelingProblem &problem) : p_(problem), pair_(problem.num_vertices * problem.num_vertices) {
        size_t n = p_.num_vertices;
        for (size_t a = 0; a < n; a++) {
            for (size_t b = 0; b < n; b++) {
                if (a != b) {
                    pair_[a * n + b] = p_.pair_invariant ? p_.pair_invariant(a, b) : 0;
                }
            }
        }
    }

    Labeling run() {
        size_t n = p_.num_vertices;
        Cells cells;
        std::map<uint64_t, std::vector<size_t>> by_color;
        for (size_t v = 0; v < n; v++) {
            by_color[p_.colors[v]].push_back(v);
        }
        for (auto &[color, members] : by_color) {
            cells.push_back(std::move(members));
        }
        search(std::move(cells));
        return std::move(best_);
    }

   private:
    void refine(Cells &cells) const {
        size_t n = p_.num_vertices;
        std::vector<size_t> cell_of(n);
        while (true) {
            for (size_t c = 0; c < cells.size(); c++) {
                for (size_t v : cells[c]) {
                    cell_of[v] = c;
                }
            }
            Cells next;
            std::vector<uint64_t> profile;
            for (const auto &cell : cells) {
                if (cell.size() == 1) {
                    next.push_back(cell);
                    continue;
                }
                std::vector<std::pair<uint64_t, size_t>> signed_members;
                for (size_t v : cell) {
                    profile.clear();
                    for (size_t u = 0; u < n; u++) {
                        if (u != v) {
                            profile.push_back(hash_combine(cell_of[u], pair_[v * n + u]));
                        }
                    }
                    std::sort(profile.begin(), profile.end());
                    uint64_t sig = 0;
                    for (uint64_t h : profile) {
                        sig = hash_combine(sig, h);
                    }
                    signed_members.emplace_back(sig, v);
                }
                std::stable_sort(signed_members.begin(), signed_members.end(),
                                 [](const auto &a, const auto &b) { return a.first < b.first; });
                for (size_t k = 0; k < signed_members.size(); k++) {
                    if (k == 0 || signed_members[k].first != signed_members[k - 1].first) {
                        next.emplace_back();
                    }
                    next.back().push_back(signed_members[k].second);
                }
            }
            bool stable = next.size() == cells.size();
            cells = std::move(next);
            if (stable) {
                return;
            }
        }
    }

    void search(Cells cells) {
        refine(cells);
        auto target = std::find_if(cells.begin(), cells.end(), [](const auto &c) { return c.size() > 1; });
        if (target == cells.end()) {
            std::vector<size_t> order;
            for (const auto &c : cells) {
                order.push_back(c.front());
            }
            best_.leaves++;
            auto cert = p_.certificate(order);
            if (!have_best_ || cert < best_.certificate) {
                best_.certificate = std::move(cert);
                best_.order = std::move(order);
                have_best_ = true;
            }
            return;
        }
        size_t index = target - cells.begin();
        std::vector<size_t> tried;
        for (size_t v : cells[index]) {
            bool redundant = p_.swap_is_automorphism && std::any_of(tried.begin(), tried.end(), [&](size_t w) {
                                 return p_.swap_is_automorphism(v, w);
                             });
            if (redundant) {
                continue;
            }
            tried.push_back(v);
            Cells child;
            child.reserve(cells.size() + 1);
            child.insert(child.end(), cells.begin(), cells.begin() + index);
            child.push_back({v});
            child.emplace_back();
            for (size_t u : cells[index]) {
                if (u != v) {
                    child.back().push_back(u);
                }
            }
            child.insert(child.end(), cells.begin() + index + 1, cells.end());
            search(std::move(child));
        }
    }

    const LabelingProblem &p_;
    std::vector<uint64_t> pair_;
    Labeling best_;
    bool have_best_ = false;
};

}  // namespace

Labeling canonical_labeling(const LabelingProblem &problem) {
    if (problem.colors.size() != problem.num_vertices || !problem.certificate) {
        throw std::invalid_argument("Labeling problem needs one color per vertex and a certificate function.");
    }
    if (problem.num_vertices == 0) {
        return Labeling{problem.certificate({}), {}, 1};
    }
    return Labeler(problem).run();
}

}  // namespace qconv
