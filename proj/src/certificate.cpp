#include <sstream>
#include <stdexcept>

#include "modscl/gluer.hpp"

namespace modscl {

namespace {

std::string endpoint_str(const ArcEndpoint& e) { return e.str(); }

ArcEndpoint parse_endpoint(const std::string& s) {
    if (s.size() < 2 || (s[0] != 'V' && s[0] != 'I'))
        throw std::invalid_argument("bad endpoint literal: " + s);
    ArcEndpoint e;
    e.at_vertex = s[0] == 'V';
    e.seg = std::stol(s.substr(1));
    return e;
}

std::string kind_str(PairingKind k) {
    switch (k) {
        case PairingKind::Edge: return "edge";
        case PairingKind::Degen: return "degen";
        case PairingKind::Fold: return "fold";
    }
    return "?";
}

PairingKind parse_kind(const std::string& s) {
    if (s == "edge") return PairingKind::Edge;
    if (s == "degen") return PairingKind::Degen;
    if (s == "fold") return PairingKind::Fold;
    throw std::invalid_argument("bad pairing kind: " + s);
}

}  // namespace

std::string serialize_certificate(const GluingCertificate& cert) {
    std::ostringstream out;
    out << "modscl-cert v1\n";
    out << "word=" << cert.word.str() << "\n";
    out << "p=" << cert.p << "\n";
    out << "gap=" << cert.gap << "\n";
    out << "wrap=" << cert.wrap << "\n";
    for (const Arc& a : cert.placement.arcs)
        out << "arc=" << letter_char(a.letter) << " exp=" << a.exponent
            << " block=" << a.block_index << " left=" << endpoint_str(a.left)
            << " right=" << endpoint_str(a.right) << "\n";
    for (const Pairing& pr : cert.placement.pairings)
        out << "pair=" << pr.a.arc << (pr.a.left ? "L" : "R") << "," << pr.b.arc
            << (pr.b.left ? "L" : "R") << " kind=" << kind_str(pr.kind) << "\n";
    if (!cert.placement.dropped_blocks.empty()) {
        out << "dropped=";
        for (std::size_t i = 0; i < cert.placement.dropped_blocks.size(); ++i)
            out << (i ? "," : "") << cert.placement.dropped_blocks[i];
        out << "\n";
    }
    out << "fold_finale=" << (cert.placement.fold_finale ? 1 : 0) << "\n";
    out << "big_run=" << cert.placement.big_run << "\n";
    out << "pieces=" << cert.pieces << "\n";
    out << "partial_pairings=" << cert.partial_pairings << "\n";
    out << "chi_assembled=" << cert.chi_assembled << "\n";
    out << "circles=";
    for (std::size_t i = 0; i < cert.initial_circles.size(); ++i)
        out << (i ? "," : "") << cert.initial_circles[i].str();
    out << "\n";
    out << "placement_cones=";
    for (std::size_t i = 0; i < cert.placement_cones.size(); ++i)
        out << (i ? "," : "") << cert.placement_cones[i];
    out << "\n";
    for (const Move& m : cert.moves) out << "move=" << m.str() << "\n";
    out << "orbifold_points=";
    for (std::size_t i = 0; i < cert.orbifold_points.size(); ++i)
        out << (i ? "," : "") << cert.orbifold_points[i];
    out << "\n";
    out << "chi_o=" << to_string(cert.chi_orb) << "\n";
    out << "end\n";
    return out.str();
}

GluingCertificate parse_certificate(const std::string& text) {
    GluingCertificate cert;
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != "modscl-cert v1")
        throw std::invalid_argument("not a modscl certificate");
    auto split_ints = [](const std::string& s) {
        std::vector<int> out;
        std::istringstream ss(s);
        std::string tok;
        while (std::getline(ss, tok, ','))
            if (!tok.empty()) out.push_back(std::stoi(tok));
        return out;
    };
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line == "end") break;
        auto eq = line.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("bad certificate line: " + line);
        std::string key = line.substr(0, eq), val = line.substr(eq + 1);
        if (key == "word") {
            cert.word = canonicalize(parse_word(val)).word;
            cert.placement.word = cert.word;
        } else if (key == "p") {
            cert.p = std::stoi(val);
            cert.placement.p = cert.p;
        } else if (key == "gap") {
            cert.gap = std::stol(val);
            cert.placement.gap = cert.gap;
        } else if (key == "wrap") {
            cert.wrap = std::stoi(val);
        } else if (key == "arc") {
            std::istringstream ss(val);
            std::string lt, expf, blockf, leftf, rightf;
            ss >> lt >> expf >> blockf >> leftf >> rightf;
            Arc a;
            a.letter = (lt == "R") ? Letter::R : Letter::L;
            a.exponent = std::stol(expf.substr(4));
            a.block_index = std::stoul(blockf.substr(6));
            a.left = parse_endpoint(leftf.substr(5));
            a.right = parse_endpoint(rightf.substr(6));
            cert.placement.arcs.push_back(a);
        } else if (key == "pair") {
            std::istringstream ss(val);
            std::string refs, kindf;
            ss >> refs >> kindf;
            auto comma = refs.find(',');
            auto parse_ref = [](const std::string& s) {
                EndpointRef r;
                r.left = s.back() == 'L';
                r.arc = std::stoul(s.substr(0, s.size() - 1));
                return r;
            };
            Pairing pr;
            pr.a = parse_ref(refs.substr(0, comma));
            pr.b = parse_ref(refs.substr(comma + 1));
            pr.kind = parse_kind(kindf.substr(5));
            cert.placement.pairings.push_back(pr);
        } else if (key == "dropped") {
            for (int v : split_ints(val))
                cert.placement.dropped_blocks.push_back(static_cast<std::size_t>(v));
        } else if (key == "fold_finale") {
            cert.placement.fold_finale = val == "1";
        } else if (key == "big_run") {
            cert.placement.big_run = std::stol(val);
        } else if (key == "pieces") {
            cert.pieces = std::stol(val);
        } else if (key == "partial_pairings") {
            cert.partial_pairings = std::stol(val);
        } else if (key == "chi_assembled") {
            cert.chi_assembled = std::stol(val);
        } else if (key == "circles") {
            std::istringstream ss(val);
            std::string tok;
            while (std::getline(ss, tok, ','))
                if (!tok.empty()) cert.initial_circles.push_back(parse_circle(tok));
        } else if (key == "placement_cones") {
            cert.placement_cones = split_ints(val);
        } else if (key == "move") {
            cert.moves.push_back(parse_move(val));
        } else if (key == "orbifold_points") {
            cert.orbifold_points = split_ints(val);
        } else if (key == "chi_o") {
            cert.chi_orb = parse_rational(val);
        } else {
            throw std::invalid_argument("unknown certificate key: " + key);
        }
    }
    return cert;
}

}  // namespace modscl
