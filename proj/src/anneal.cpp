#include "cryst/anneal.hpp"

#include <algorithm>
#include <sstream>

namespace cryst {

std::string MoveLog::to_string() const {
    std::ostringstream os;
    for (const auto& e : entries) {
        os << e.step << " " << e.move.to_string() << " ";
        for (int k = 0; k <= e.fvec.dim; ++k) os << (k ? "," : "") << e.fvec.f[k];
        os << " rng=" << std::hex << e.rng_state << std::dec << "\n";
    }
    return os.str();
}

MoveLog MoveLog::parse(const std::string& text) {
    MoveLog log;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        MoveLogEntry e;
        std::string kind, site, fvec, rng;
        if (!(ls >> e.step >> kind >> site >> fvec))
            fail(errc::parse_error, "move log line " + std::to_string(lineno));
        auto m = parse_move(kind + " " + site);
        if (!m) fail(errc::parse_error, "move log line " + std::to_string(lineno) + ": bad move");
        e.move = *m;
        std::istringstream fs(fvec);
        std::string tok;
        int k = 0;
        while (std::getline(fs, tok, ',')) {
            if (k >= 5) fail(errc::parse_error, "move log line " + std::to_string(lineno));
            e.fvec.f[k++] = std::stoll(tok);
        }
        e.fvec.dim = k - 1;
        if (ls >> rng && rng.rfind("rng=", 0) == 0)
            e.rng_state = std::stoull(rng.substr(4), nullptr, 16);
        log.entries.push_back(std::move(e));
    }
    return log;
}

namespace {

bool target_reached(const CellComplex& c, const FVector& fv, const AnnealTarget& t) {
    if (t.kind == AnnealTarget::Kind::facet_count) return c.facet_count() <= t.facets;
    return fv.f[0] == 5 && fv.f[1] == 10;
}

} // namespace

AnnealResult simplify(const CellComplex& c, const AnnealConfig& cfg) {
    if (cfg.max_steps < 0) fail(errc::invalid_config, "max_steps must be >= 0");
    std::uint64_t wsum = 0;
    for (auto w : cfg.weights) wsum += w;
    if (wsum == 0) fail(errc::invalid_config, "all move weights are zero");
    if (cfg.plateau_patience <= 0) fail(errc::invalid_config, "plateau_patience must be > 0");

    SplitMix64 rng(cfg.seed);
    CellComplex cur = c;
    FVector fv = f_vector(cur);
    MoveLog log;

    long best_facets = cur.facet_count();
    long since_improve = 0;
    long step = 0;

    bool improved = false;
    auto book_keep = [&](const Move& m, std::uint64_t rng_before) {
        fv = f_vector(cur);
        ++step;
        log.entries.push_back(MoveLogEntry{step, m, fv, rng_before});
        if (cur.facet_count() < best_facets) {
            best_facets = cur.facet_count();
            since_improve = 0;
            improved = true;
        } else {
            ++since_improve;
        }
    };

    // Scramble burst: facet-neutral 2-moves, opened by a 0-move when none
    // exist (a contracted complex admits only 0-moves, so escaping needs the
    // extra vertex first).
    auto burst = [&]() {
        std::uint64_t count = 5 + rng.below(11);
        for (std::uint64_t b = 0; b < count && step < cfg.max_steps; ++b) {
            std::uint64_t mark = rng.state;
            auto sites = available_moves(cur, Move::Kind::bistellar, 2);
            if (sites.empty()) {
                if (b > 0) break;
                sites = available_moves(cur, Move::Kind::bistellar, 0);
            }
            Move m = sites[rng.below(sites.size())];
            cur = apply(cur, m);
            book_keep(m, mark);
        }
        since_improve = 0;
    };

    // Restart state: the walk rewinds to its smallest complex when it drifts
    // too far up, truncating the log so replays stay exact.
    CellComplex best_complex = cur;
    std::size_t best_log_size = 0;

    while (true) {
        if (target_reached(cur, fv, cfg.target))
            return AnnealResult{std::move(cur), std::move(log), AnnealOutcome::target_reached};
        if (step >= cfg.max_steps)
            return AnnealResult{std::move(cur), std::move(log), AnnealOutcome::steps_exhausted};

        if (improved) {
            improved = false;
            best_complex = cur;
            best_log_size = log.entries.size();
        }
        if (cur.facet_count() > best_complex.facet_count() + 16) {
            cur = best_complex;
            log.entries.resize(best_log_size);
            fv = f_vector(cur);
            since_improve = 0;
            continue;
        }

        if (since_improve >= cfg.plateau_patience) {
            burst();
            continue;
        }

        std::uint64_t mark = rng.state;
        std::array<std::uint32_t, 6> w = cfg.weights;
        bool applied = false;
        while (!applied) {
            std::uint64_t total = 0;
            for (auto x : w) total += x;
            bool only_expanding = true;
            for (int k = 1; k < 6; ++k)
                if (w[k] > 0) only_expanding = false;
            if (only_expanding) {
                // Trapped: everything but 0-moves is empty. Escape sideways
                // instead of inflating and immediately collapsing back.
                burst();
                break;
            }
            if (total == 0) fail(errc::invalid_config, "no moves available in any class");
            std::uint64_t pick = rng.below(total);
            int cls = 0;
            for (; cls < 6; ++cls) {
                if (pick < w[cls]) break;
                pick -= w[cls];
            }
            if (cls < 5) {
                auto sites = available_moves(cur, Move::Kind::bistellar, cls);
                if (sites.empty()) {
                    w[cls] = 0; // class empty on this complex; redraw among the rest
                    continue;
                }
                Move m = sites[rng.below(sites.size())];
                cur = apply(cur, m);
                book_keep(m, mark);
                applied = true;
            } else {
                // Contractions are tried edge by edge in random order; the
                // first legal one is kept.
                FaceClasses fc = face_classes(cur);
                std::vector<std::pair<int, std::uint32_t>> edges;
                for (std::size_t id = 0; id < fc.members.size(); ++id)
                    if (fc.corners[id] == 2)
                        edges.emplace_back(fc.members[id][0].first,
                                           static_cast<std::uint32_t>(fc.members[id][0].second));
                while (!edges.empty() && !applied) {
                    std::uint64_t at = rng.below(edges.size());
                    auto [f, m] = edges[at];
                    edges[at] = edges.back();
                    edges.pop_back();
                    if (auto res = try_edge_contraction(cur, f, m)) {
                        cur = std::move(*res);
                        book_keep(Move{Move::Kind::edge_contraction, 0, f, m}, mark);
                        applied = true;
                    }
                }
                if (!applied) w[5] = 0;
            }
        }
    }
}

CellComplex replay(const CellComplex& initial, const MoveLog& log) {
    CellComplex cur = initial;
    for (const auto& e : log.entries) {
        cur = apply(cur, e.move);
        FVector fv = f_vector(cur);
        if (fv != e.fvec)
            fail(errc::validation_failed,
                 "replay diverged at step " + std::to_string(e.step));
    }
    return cur;
}

} // namespace cryst
