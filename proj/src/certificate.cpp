#include "gem/canonical.hpp"
#include "gem/reduce.hpp"

namespace gem {

bool operator==(const ComposeStep& a, const ComposeStep& b) {
    auto same = [](const std::shared_ptr<const Certificate>& x, const std::shared_ptr<const Certificate>& y) {
        if (!x || !y) return !x && !y;
        return *x == *y;
    };
    return a.seam == b.seam && a.fingerprint == b.fingerprint && same(a.left, b.left) && same(a.right, b.right);
}

std::size_t Certificate::section_count() const {
    std::size_t total = 1;
    for (const auto& s : steps) {
        if (const auto* c = std::get_if<ComposeStep>(&s)) {
            if (c->left) total += c->left->section_count();
            if (c->right) total += c->right->section_count();
        }
    }
    return total;
}

std::size_t Certificate::step_count() const {
    std::size_t total = steps.size();
    for (const auto& s : steps) {
        if (const auto* c = std::get_if<ComposeStep>(&s)) {
            if (c->left) total += c->left->step_count();
            if (c->right) total += c->right->step_count();
        }
    }
    return total;
}

ColoredGraph compose_realization(const CanonicalForm& left, const CanonicalForm& right) {
    const bool swap = left.kind == CanonicalForm::Kind::P && right.kind == CanonicalForm::Kind::T;
    const CanonicalForm& first = swap ? right : left;
    const CanonicalForm& second = swap ? left : right;
    const ColoredGraph a = realize(first);
    return connected_sum(a, a.vertex_count(), realize(second), 1, false);
}

std::optional<CanonicalForm> combine_forms(const CanonicalForm& a, const CanonicalForm& b) {
    using K = CanonicalForm::Kind;
    if (a.kind == K::L) return b;
    if (b.kind == K::L) return a;
    if (a.kind != b.kind) return std::nullopt;
    return a.kind == K::P ? CanonicalForm::P(a.m + b.m) : CanonicalForm::T(a.m + b.m);
}

namespace {

struct Replay {
    int next_section = 0;

    VerifiedCertificate section(const ColoredGraph& g, const Certificate& cert) {
        const int id = ++next_section;
        const std::string name = "section " + std::to_string(id);
        if (fingerprint(g) != cert.initial_fingerprint)
            throw CertificateError(name, "initial fingerprint does not match the graph");
        ColoredGraph current = g;
        int index = 0;
        for (const auto& step : cert.steps) {
            ++index;
            const std::string where = name + " step " + std::to_string(index);
            if (const auto* t = std::get_if<TraceStep>(&step)) {
                try {
                    current = apply_move(current, t->move);
                } catch (const MoveError& e) {
                    throw CertificateError(where, std::string("illegal move: ") + e.what());
                }
                if (fingerprint(current) != t->fingerprint) throw CertificateError(where, "fingerprint mismatch");
                continue;
            }
            const auto& c = std::get<ComposeStep>(step);
            if (!c.left || !c.right) throw CertificateError(where, "compose step without sub-certificates");
            Seam seam;
            try {
                seam = seam_from_edges(current, c.seam);
            } catch (const GraphError& e) {
                throw CertificateError(where, std::string("not a seam: ") + e.what());
            }
            if (!seam.proper) throw CertificateError(where, "seam is not proper");
            const Summands parts = extract_summands(current, seam);
            const auto left = section(parts.left, *c.left);
            const auto right = section(parts.right, *c.right);
            if (!left.conclusion || !right.conclusion)
                throw CertificateError(where, "sub-certificate has no conclusion");
            current = compose_realization(*left.conclusion, *right.conclusion);
            if (fingerprint(current) != c.fingerprint) throw CertificateError(where, "fingerprint mismatch");
        }
        if (cert.conclusion && fingerprint(current) != fingerprint(realize(*cert.conclusion)))
            throw CertificateError(name, "final graph is not isomorphic to " + to_string(*cert.conclusion));
        return {current, cert.conclusion};
    }
};

}  // namespace

VerifiedCertificate verify_certificate(const ColoredGraph& g, const Certificate& cert) {
    Replay replay;
    return replay.section(g, cert);
}

Certificate as_certificate(const MoveTrace& trace) {
    Certificate cert;
    cert.initial_fingerprint = trace.initial_fingerprint;
    for (const auto& s : trace.steps) cert.steps.emplace_back(s);
    return cert;
}

}  // namespace gem
