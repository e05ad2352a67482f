#include "branchcone/config.hpp"

#include <fstream>
#include <sstream>

namespace branchcone {

namespace {

std::string trim(const std::string& s)
{
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos)
        return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<long> parse_long_list(const std::string& s)
{
    std::vector<long> out;
    std::istringstream is(s);
    long v;
    while (is >> v)
        out.push_back(v);
    if (!is.eof())
        throw ParseError("expected a list of integers, got '" + s + "'");
    return out;
}

// "name(arg1, arg2, ...)" -> name, args.
std::pair<std::string, std::vector<std::string>> parse_call(const std::string& s)
{
    std::size_t open = s.find('(');
    if (open == std::string::npos)
        return {trim(s), {}};
    std::size_t close = s.rfind(')');
    if (close == std::string::npos || close < open)
        throw ParseError("unbalanced parentheses in '" + s + "'");
    std::string name = trim(s.substr(0, open));
    std::vector<std::string> args;
    std::string inside = s.substr(open + 1, close - open - 1);
    std::istringstream is(inside);
    std::string tok;
    while (std::getline(is, tok, ','))
        args.push_back(trim(tok));
    if (args.size() == 1 && args[0].empty())
        args.clear();
    return {name, args};
}

} // namespace

JobConfig JobConfig::parse_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open config file '" + path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return parse_text(text.str());
}

JobConfig JobConfig::parse_text(const std::string& text)
{
    JobConfig cfg;
    std::istringstream in(text);
    std::string line;
    bool in_matrix = false;
    while (std::getline(in, line)) {
        std::size_t hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        std::string t = trim(line);
        if (t.empty())
            continue;
        if (in_matrix) {
            bool numeric = true;
            for (char c : t)
                if (!isdigit(static_cast<unsigned char>(c)) && c != '-' && c != ' ' && c != '\t')
                    numeric = false;
            if (numeric) {
                cfg.cartan_map.push_back(parse_long_list(t));
                continue;
            }
            in_matrix = false;
        }
        std::size_t eq = t.find('=');
        if (eq == std::string::npos)
            throw ParseError("bad config line '" + t + "'");
        std::string key = trim(t.substr(0, eq));
        std::string value = trim(t.substr(eq + 1));
        if (key == "embedding")
            cfg.builder = value;
        else if (key == "g")
            cfg.g_type = value;
        else if (key == "g_hat")
            cfg.ghat_type = value;
        else if (key == "cartan_map") {
            if (!value.empty())
                throw ParseError("cartan_map rows must follow on their own lines");
            in_matrix = true;
        } else if (key == "weyl_cap")
            cfg.weyl_cap = static_cast<std::size_t>(std::stoull(value));
        else if (key == "rep_dim_cap")
            cfg.rep_dim_cap = std::stol(value);
        else if (key == "nmax")
            cfg.nmax = std::stoi(value);
        else if (key == "format")
            cfg.format = value;
        else if (key == "out")
            cfg.out = value;
        else if (key == "mu")
            cfg.mu = parse_long_list(value);
        else if (key == "mu_hat")
            cfg.mu_hat = parse_long_list(value);
        else
            throw ParseError("unknown config key '" + key + "'");
    }
    if (cfg.builder && (cfg.g_type || cfg.ghat_type || !cfg.cartan_map.empty()))
        throw ParseError("config must use either a builder or an explicit embedding, not both");
    if (!cfg.builder && !(cfg.g_type && cfg.ghat_type && !cfg.cartan_map.empty()))
        throw ParseError("config needs 'embedding = ...' or g/g_hat/cartan_map");
    if (cfg.format != "tsv" && cfg.format != "json")
        throw ParseError("format must be tsv or json");
    if (cfg.nmax < 1 || cfg.rep_dim_cap < 1 || cfg.weyl_cap < 1)
        throw ParseError("budgets must be positive");
    return cfg;
}

Embedding JobConfig::build_embedding() const
{
    if (!builder)
        return build_explicit(*g_type, *ghat_type, cartan_map, weyl_cap);
    auto [name, args] = parse_call(*builder);
    auto need = [&](std::size_t n) {
        if (args.size() != n)
            throw ParseError("builder " + name + " expects " + std::to_string(n) + " arguments");
    };
    if (name == "sp_in_sl") {
        need(1);
        return build_sp_in_sl(static_cast<std::size_t>(std::stoul(args[0])), weyl_cap);
    }
    if (name == "diagonal") {
        need(2);
        return build_diagonal(args[0], static_cast<std::size_t>(std::stoul(args[1])), weyl_cap);
    }
    if (name == "factor") {
        need(3);
        return build_factor(args[0], static_cast<std::size_t>(std::stoul(args[1])),
                            static_cast<std::size_t>(std::stoul(args[2])), weyl_cap);
    }
    if (name == "root_sl2") {
        need(2);
        return build_root_sl2(args[0], static_cast<std::size_t>(std::stoul(args[1])), weyl_cap);
    }
    if (name == "principal_sl2") {
        need(1);
        return build_principal_sl2(args[0], weyl_cap);
    }
    if (name == "dynkin_sl2") {
        if (args.size() < 2)
            throw ParseError("dynkin_sl2 expects a type and labels");
        std::vector<long> labels;
        for (std::size_t i = 1; i < args.size(); ++i)
            labels.push_back(std::stol(args[i]));
        return build_dynkin_sl2(args[0], labels, weyl_cap);
    }
    throw ParseError("unknown builder '" + name + "'");
}

} // namespace branchcone
