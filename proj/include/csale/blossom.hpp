// blossom.hpp - maximum-weight matching in general graphs (Edmonds' blossom, O(V^3))
//
// Primal-dual weighted blossom algorithm following Galil's presentation
// ("Efficient algorithms for finding maximum matching in graphs", 1986) in
// the array-based form popularized by J. van Rantwijk's mwmatching. Weights
// are integers, which keeps every dual variable an integer and every slack
// comparison exact.
#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <optional>
#include <vector>

namespace csale {

struct WeightedEdge {
    std::size_t u;
    std::size_t v;
    std::int64_t weight;
};

namespace detail {

class BlossomMatcher {
public:
    BlossomMatcher(std::size_t nvertex, const std::vector<WeightedEdge>& edges, bool max_cardinality)
        : nv_(nvertex), edges_(edges), maxcard_(max_cardinality) {}

    std::vector<std::int64_t> solve() {
        const std::size_t ne = edges_.size();
        if (ne == 0) return std::vector<std::int64_t>(nv_, -1);

        std::int64_t maxweight = 0;
        for (const auto& e : edges_) maxweight = std::max(maxweight, e.weight);

        endpoint_.resize(2 * ne);
        for (std::size_t p = 0; p < 2 * ne; ++p) endpoint_[p] = p % 2 == 0 ? edges_[p / 2].u : edges_[p / 2].v;
        neighbend_.assign(nv_, {});
        for (std::size_t k = 0; k < ne; ++k) {
            neighbend_[edges_[k].u].push_back(2 * k + 1);
            neighbend_[edges_[k].v].push_back(2 * k);
        }

        mate_.assign(nv_, -1);
        label_.assign(2 * nv_, 0);
        labelend_.assign(2 * nv_, -1);
        inblossom_.resize(nv_);
        for (std::size_t i = 0; i < nv_; ++i) inblossom_[i] = static_cast<std::int64_t>(i);
        blossomparent_.assign(2 * nv_, -1);
        blossomchilds_.assign(2 * nv_, {});
        blossombase_.assign(2 * nv_, -1);
        for (std::size_t i = 0; i < nv_; ++i) blossombase_[i] = static_cast<std::int64_t>(i);
        blossomendps_.assign(2 * nv_, {});
        bestedge_.assign(2 * nv_, -1);
        blossombestedges_.assign(2 * nv_, {});
        has_bestedges_.assign(2 * nv_, 0);
        unusedblossoms_.clear();
        for (std::size_t b = nv_; b < 2 * nv_; ++b) unusedblossoms_.push_back(static_cast<std::int64_t>(b));
        dualvar_.assign(2 * nv_, 0);
        for (std::size_t i = 0; i < nv_; ++i) dualvar_[i] = maxweight;
        allowedge_.assign(ne, 0);

        for (std::size_t stage = 0; stage < nv_; ++stage) {
            std::fill(label_.begin(), label_.end(), 0);
            std::fill(bestedge_.begin(), bestedge_.end(), -1);
            for (std::size_t b = nv_; b < 2 * nv_; ++b) {
                blossombestedges_[b].clear();
                has_bestedges_[b] = 0;
            }
            std::fill(allowedge_.begin(), allowedge_.end(), 0);
            queue_.clear();

            for (std::size_t v = 0; v < nv_; ++v)
                if (mate_[v] == -1 && label_[inblossom_[v]] == 0) assign_label(v, 1, -1);

            bool augmented = false;
            for (;;) {
                while (!queue_.empty() && !augmented) {
                    const std::int64_t v = queue_.back();
                    queue_.pop_back();
                    assert(label_[inblossom_[v]] == 1);
                    for (std::int64_t p : neighbend_[v]) {
                        const std::int64_t k = p / 2;
                        const std::int64_t w = endpoint_[p];
                        if (inblossom_[v] == inblossom_[w]) continue;
                        std::int64_t kslack = 0;
                        if (!allowedge_[k]) {
                            kslack = slack(k);
                            if (kslack <= 0) allowedge_[k] = 1;
                        }
                        if (allowedge_[k]) {
                            if (label_[inblossom_[w]] == 0) {
                                assign_label(w, 2, p ^ 1);
                            } else if (label_[inblossom_[w]] == 1) {
                                const std::int64_t base = scan_blossom(v, w);
                                if (base >= 0) {
                                    add_blossom(base, k);
                                } else {
                                    augment_matching(k);
                                    augmented = true;
                                    break;
                                }
                            } else if (label_[w] == 0) {
                                label_[w] = 2;
                                labelend_[w] = p ^ 1;
                            }
                        } else if (label_[inblossom_[w]] == 1) {
                            const std::int64_t b = inblossom_[v];
                            if (bestedge_[b] == -1 || kslack < slack(bestedge_[b])) bestedge_[b] = k;
                        } else if (label_[w] == 0) {
                            if (bestedge_[w] == -1 || kslack < slack(bestedge_[w])) bestedge_[w] = k;
                        }
                    }
                }
                if (augmented) break;

                // Dual adjustment.
                int deltatype = -1;
                std::int64_t delta = 0, deltaedge = -1, deltablossom = -1;
                if (!maxcard_) {
                    deltatype = 1;
                    delta = *std::min_element(dualvar_.begin(), dualvar_.begin() + static_cast<std::ptrdiff_t>(nv_));
                }
                for (std::size_t v = 0; v < nv_; ++v) {
                    if (label_[inblossom_[v]] == 0 && bestedge_[v] != -1) {
                        const std::int64_t d = slack(bestedge_[v]);
                        if (deltatype == -1 || d < delta) {
                            delta = d;
                            deltatype = 2;
                            deltaedge = bestedge_[v];
                        }
                    }
                }
                for (std::size_t b = 0; b < 2 * nv_; ++b) {
                    if (blossomparent_[b] == -1 && label_[b] == 1 && bestedge_[b] != -1) {
                        const std::int64_t ks = slack(bestedge_[b]);
                        assert(ks % 2 == 0);
                        const std::int64_t d = ks / 2;
                        if (deltatype == -1 || d < delta) {
                            delta = d;
                            deltatype = 3;
                            deltaedge = bestedge_[b];
                        }
                    }
                }
                for (std::size_t b = nv_; b < 2 * nv_; ++b) {
                    if (blossombase_[b] >= 0 && blossomparent_[b] == -1 && label_[b] == 2 &&
                        (deltatype == -1 || dualvar_[b] < delta)) {
                        delta = dualvar_[b];
                        deltatype = 4;
                        deltablossom = static_cast<std::int64_t>(b);
                    }
                }
                if (deltatype == -1) {
                    // No further improvement possible in max-cardinality mode.
                    deltatype = 1;
                    delta = std::max<std::int64_t>(
                        0, *std::min_element(dualvar_.begin(), dualvar_.begin() + static_cast<std::ptrdiff_t>(nv_)));
                }

                for (std::size_t v = 0; v < nv_; ++v) {
                    if (label_[inblossom_[v]] == 1) dualvar_[v] -= delta;
                    else if (label_[inblossom_[v]] == 2) dualvar_[v] += delta;
                }
                for (std::size_t b = nv_; b < 2 * nv_; ++b) {
                    if (blossombase_[b] >= 0 && blossomparent_[b] == -1) {
                        if (label_[b] == 1) dualvar_[b] += delta;
                        else if (label_[b] == 2) dualvar_[b] -= delta;
                    }
                }

                if (deltatype == 1) {
                    break;
                } else if (deltatype == 2) {
                    allowedge_[deltaedge] = 1;
                    std::int64_t i = static_cast<std::int64_t>(edges_[deltaedge].u);
                    std::int64_t j = static_cast<std::int64_t>(edges_[deltaedge].v);
                    if (label_[inblossom_[i]] == 0) std::swap(i, j);
                    assert(label_[inblossom_[i]] == 1);
                    queue_.push_back(i);
                } else if (deltatype == 3) {
                    allowedge_[deltaedge] = 1;
                    const auto i = static_cast<std::int64_t>(edges_[deltaedge].u);
                    assert(label_[inblossom_[i]] == 1);
                    queue_.push_back(i);
                } else {
                    expand_blossom(deltablossom, false);
                }
            }
            if (!augmented) break;

            for (std::size_t b = nv_; b < 2 * nv_; ++b)
                if (blossomparent_[b] == -1 && blossombase_[b] >= 0 && label_[b] == 1 && dualvar_[b] == 0)
                    expand_blossom(static_cast<std::int64_t>(b), true);
        }

        std::vector<std::int64_t> result(nv_, -1);
        for (std::size_t v = 0; v < nv_; ++v)
            if (mate_[v] >= 0) result[v] = endpoint_[mate_[v]];
        return result;
    }

private:
    std::int64_t slack(std::int64_t k) const {
        const auto& e = edges_[static_cast<std::size_t>(k)];
        return dualvar_[e.u] + dualvar_[e.v] - 2 * e.weight;
    }

    void blossom_leaves(std::int64_t b, std::vector<std::int64_t>& out) const {
        if (b < static_cast<std::int64_t>(nv_)) {
            out.push_back(b);
            return;
        }
        for (std::int64_t t : blossomchilds_[b]) blossom_leaves(t, out);
    }

    std::vector<std::int64_t> leaves(std::int64_t b) const {
        std::vector<std::int64_t> out;
        blossom_leaves(b, out);
        return out;
    }

    void assign_label(std::int64_t w, int t, std::int64_t p) {
        const std::int64_t b = inblossom_[w];
        assert(label_[w] == 0 && label_[b] == 0);
        label_[w] = label_[b] = t;
        labelend_[w] = labelend_[b] = p;
        bestedge_[w] = bestedge_[b] = -1;
        if (t == 1) {
            blossom_leaves(b, queue_);
        } else if (t == 2) {
            const std::int64_t base = blossombase_[b];
            assert(mate_[base] >= 0);
            assign_label(endpoint_[mate_[base]], 1, mate_[base] ^ 1);
        }
    }

    std::int64_t scan_blossom(std::int64_t v, std::int64_t w) {
        std::vector<std::int64_t> path;
        std::int64_t base = -1;
        while (v != -1 || w != -1) {
            std::int64_t b = inblossom_[v];
            if (label_[b] & 4) {
                base = blossombase_[b];
                break;
            }
            assert(label_[b] == 1);
            path.push_back(b);
            label_[b] = 5;
            if (labelend_[b] == -1) {
                v = -1;
            } else {
                v = endpoint_[labelend_[b]];
                b = inblossom_[v];
                assert(label_[b] == 2);
                v = endpoint_[labelend_[b]];
            }
            if (w != -1) std::swap(v, w);
        }
        for (std::int64_t b : path) label_[b] = 1;
        return base;
    }

    void add_blossom(std::int64_t base, std::int64_t k) {
        std::int64_t v = static_cast<std::int64_t>(edges_[k].u);
        std::int64_t w = static_cast<std::int64_t>(edges_[k].v);
        const std::int64_t bb = inblossom_[base];
        std::int64_t bv = inblossom_[v];
        std::int64_t bw = inblossom_[w];
        const std::int64_t b = unusedblossoms_.back();
        unusedblossoms_.pop_back();
        blossombase_[b] = base;
        blossomparent_[b] = -1;
        blossomparent_[bb] = b;
        auto& path = blossomchilds_[b];
        auto& endps = blossomendps_[b];
        path.clear();
        endps.clear();
        while (bv != bb) {
            blossomparent_[bv] = b;
            path.push_back(bv);
            endps.push_back(labelend_[bv]);
            v = endpoint_[labelend_[bv]];
            bv = inblossom_[v];
        }
        path.push_back(bb);
        std::reverse(path.begin(), path.end());
        std::reverse(endps.begin(), endps.end());
        endps.push_back(2 * k);
        while (bw != bb) {
            blossomparent_[bw] = b;
            path.push_back(bw);
            endps.push_back(labelend_[bw] ^ 1);
            w = endpoint_[labelend_[bw]];
            bw = inblossom_[w];
        }
        assert(label_[bb] == 1);
        label_[b] = 1;
        labelend_[b] = labelend_[bb];
        dualvar_[b] = 0;
        for (std::int64_t leaf : leaves(b)) {
            if (label_[inblossom_[leaf]] == 2) queue_.push_back(leaf);
            inblossom_[leaf] = b;
        }

        std::vector<std::int64_t> bestedgeto(2 * nv_, -1);
        for (std::int64_t child : path) {
            std::vector<std::vector<std::int64_t>> nblists;
            if (!has_bestedges_[child]) {
                for (std::int64_t leaf : leaves(child)) {
                    std::vector<std::int64_t> lst;
                    for (std::int64_t p : neighbend_[leaf]) lst.push_back(p / 2);
                    nblists.push_back(std::move(lst));
                }
            } else {
                nblists.push_back(blossombestedges_[child]);
            }
            for (const auto& nblist : nblists) {
                for (std::int64_t kk : nblist) {
                    std::int64_t i = static_cast<std::int64_t>(edges_[kk].u);
                    std::int64_t j = static_cast<std::int64_t>(edges_[kk].v);
                    if (inblossom_[j] == b) std::swap(i, j);
                    const std::int64_t bj = inblossom_[j];
                    if (bj != b && label_[bj] == 1 &&
                        (bestedgeto[bj] == -1 || slack(kk) < slack(bestedgeto[bj])))
                        bestedgeto[bj] = kk;
                }
            }
            blossombestedges_[child].clear();
            has_bestedges_[child] = 0;
            bestedge_[child] = -1;
        }
        blossombestedges_[b].clear();
        for (std::int64_t kk : bestedgeto)
            if (kk != -1) blossombestedges_[b].push_back(kk);
        has_bestedges_[b] = 1;
        bestedge_[b] = -1;
        for (std::int64_t kk : blossombestedges_[b])
            if (bestedge_[b] == -1 || slack(kk) < slack(bestedge_[b])) bestedge_[b] = kk;
    }

    void expand_blossom(std::int64_t b, bool endstage) {
        const std::vector<std::int64_t> childs = blossomchilds_[b];
        for (std::int64_t s : childs) {
            blossomparent_[s] = -1;
            if (s < static_cast<std::int64_t>(nv_)) {
                inblossom_[s] = s;
            } else if (endstage && dualvar_[s] == 0) {
                expand_blossom(s, endstage);
            } else {
                for (std::int64_t leaf : leaves(s)) inblossom_[leaf] = s;
            }
        }
        if (!endstage && label_[b] == 2) {
            const auto len = static_cast<std::int64_t>(childs.size());
            const auto& endps = blossomendps_[b];
            auto child_at = [&](std::int64_t idx) { return childs[static_cast<std::size_t>(((idx % len) + len) % len)]; };
            auto endp_at = [&](std::int64_t idx) { return endps[static_cast<std::size_t>(((idx % len) + len) % len)]; };

            const std::int64_t entrychild = inblossom_[endpoint_[labelend_[b] ^ 1]];
            std::int64_t j = std::find(childs.begin(), childs.end(), entrychild) - childs.begin();
            std::int64_t jstep, endptrick;
            if (j & 1) {
                j -= len;
                jstep = 1;
                endptrick = 0;
            } else {
                jstep = -1;
                endptrick = 1;
            }
            std::int64_t p = labelend_[b];
            while (j != 0) {
                label_[endpoint_[p ^ 1]] = 0;
                label_[endpoint_[endp_at(j - endptrick) ^ endptrick ^ 1]] = 0;
                assign_label(endpoint_[p ^ 1], 2, p);
                allowedge_[endp_at(j - endptrick) / 2] = 1;
                j += jstep;
                p = endp_at(j - endptrick) ^ endptrick;
                allowedge_[p / 2] = 1;
                j += jstep;
            }
            std::int64_t bv = child_at(j);
            label_[endpoint_[p ^ 1]] = label_[bv] = 2;
            labelend_[endpoint_[p ^ 1]] = labelend_[bv] = p;
            bestedge_[bv] = -1;
            j += jstep;
            while (child_at(j) != entrychild) {
                bv = child_at(j);
                if (label_[bv] == 1) {
                    j += jstep;
                    continue;
                }
                std::int64_t found = -1;
                for (std::int64_t leaf : leaves(bv)) {
                    if (label_[leaf] != 0) {
                        found = leaf;
                        break;
                    }
                }
                if (found != -1) {
                    assert(label_[found] == 2);
                    assert(inblossom_[found] == bv);
                    label_[found] = 0;
                    label_[endpoint_[mate_[blossombase_[bv]]]] = 0;
                    assign_label(found, 2, labelend_[found]);
                }
                j += jstep;
            }
        }
        label_[b] = labelend_[b] = -1;
        blossomchilds_[b].clear();
        blossomendps_[b].clear();
        blossombase_[b] = -1;
        blossombestedges_[b].clear();
        has_bestedges_[b] = 0;
        bestedge_[b] = -1;
        unusedblossoms_.push_back(b);
    }

    void augment_blossom(std::int64_t b, std::int64_t v) {
        std::int64_t t = v;
        while (blossomparent_[t] != b) t = blossomparent_[t];
        if (t >= static_cast<std::int64_t>(nv_)) augment_blossom(t, v);
        auto& childs = blossomchilds_[b];
        auto& endps = blossomendps_[b];
        const auto len = static_cast<std::int64_t>(childs.size());
        auto wrap = [&](std::int64_t idx) { return static_cast<std::size_t>(((idx % len) + len) % len); };

        const std::int64_t i = std::find(childs.begin(), childs.end(), t) - childs.begin();
        std::int64_t j = i;
        std::int64_t jstep, endptrick;
        if (i & 1) {
            j -= len;
            jstep = 1;
            endptrick = 0;
        } else {
            jstep = -1;
            endptrick = 1;
        }
        while (j != 0) {
            j += jstep;
            t = childs[wrap(j)];
            const std::int64_t p = endps[wrap(j - endptrick)] ^ endptrick;
            if (t >= static_cast<std::int64_t>(nv_)) augment_blossom(t, endpoint_[p]);
            j += jstep;
            t = childs[wrap(j)];
            if (t >= static_cast<std::int64_t>(nv_)) augment_blossom(t, endpoint_[p ^ 1]);
            mate_[endpoint_[p]] = p ^ 1;
            mate_[endpoint_[p ^ 1]] = p;
        }
        std::rotate(childs.begin(), childs.begin() + i, childs.end());
        std::rotate(endps.begin(), endps.begin() + i, endps.end());
        blossombase_[b] = blossombase_[childs[0]];
        assert(blossombase_[b] == v);
    }

    void augment_matching(std::int64_t k) {
        const std::int64_t v = static_cast<std::int64_t>(edges_[k].u);
        const std::int64_t w = static_cast<std::int64_t>(edges_[k].v);
        const std::pair<std::int64_t, std::int64_t> starts[2] = {{v, 2 * k + 1}, {w, 2 * k}};
        for (auto [s, p] : starts) {
            for (;;) {
                const std::int64_t bs = inblossom_[s];
                assert(label_[bs] == 1);
                if (bs >= static_cast<std::int64_t>(nv_)) augment_blossom(bs, s);
                mate_[s] = p;
                if (labelend_[bs] == -1) break;
                const std::int64_t t = endpoint_[labelend_[bs]];
                const std::int64_t bt = inblossom_[t];
                assert(label_[bt] == 2);
                s = endpoint_[labelend_[bt]];
                const std::int64_t j = endpoint_[labelend_[bt] ^ 1];
                assert(blossombase_[bt] == t);
                if (bt >= static_cast<std::int64_t>(nv_)) augment_blossom(bt, j);
                mate_[j] = labelend_[bt];
                p = labelend_[bt] ^ 1;
            }
        }
    }

    std::size_t nv_;
    const std::vector<WeightedEdge>& edges_;
    bool maxcard_;

    std::vector<std::int64_t> endpoint_;
    std::vector<std::vector<std::int64_t>> neighbend_;
    std::vector<std::int64_t> mate_;
    std::vector<int> label_;
    std::vector<std::int64_t> labelend_;
    std::vector<std::int64_t> inblossom_;
    std::vector<std::int64_t> blossomparent_;
    std::vector<std::vector<std::int64_t>> blossomchilds_;
    std::vector<std::int64_t> blossombase_;
    std::vector<std::vector<std::int64_t>> blossomendps_;
    std::vector<std::int64_t> bestedge_;
    std::vector<std::vector<std::int64_t>> blossombestedges_;
    std::vector<char> has_bestedges_;
    std::vector<std::int64_t> unusedblossoms_;
    std::vector<std::int64_t> dualvar_;
    std::vector<char> allowedge_;
    std::vector<std::int64_t> queue_;
};

}  // namespace detail

/// Maximum-weight matching on vertices [0, vertex_count). With
/// `max_cardinality`, only maximum-cardinality matchings are considered.
/// Returns mate[v] (or -1 for unmatched vertices).
inline std::vector<std::int64_t> max_weight_matching(std::size_t vertex_count,
                                                     const std::vector<WeightedEdge>& edges,
                                                     bool max_cardinality) {
    detail::BlossomMatcher m(vertex_count, edges, max_cardinality);
    return m.solve();
}

}  // namespace csale
