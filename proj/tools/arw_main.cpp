// arw: exact symmetric-function calculator and algebraic-random-walk runner.

#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "arw/cache.hpp"
#include "arw/characters.hpp"
#include "arw/coalgebra.hpp"
#include "arw/config.hpp"
#include "arw/errors.hpp"
#include "arw/expr.hpp"
#include "arw/partition.hpp"
#include "arw/walk_config.hpp"

namespace {

constexpr int kExitError = 1;
constexpr int kExitConfig = 2;
constexpr int kExitBranchCap = 3;
constexpr int kExitIo = 4;

arw::Basis parse_basis(const std::string& name) {
    if (name.size() != 1) throw arw::DomainError("basis must be one of p, s, h, e, m");
    return arw::basis_from_letter(name[0]);
}

void print_stats() {
    const arw::Stats& s = arw::stats();
    std::cerr << "stats: char_tables_built=" << s.char_tables_built.load()
              << " char_tables_loaded=" << s.char_tables_loaded.load()
              << " char_cells_computed=" << s.char_cells_computed.load()
              << " pleth_tables_built=" << s.pleth_tables_built.load()
              << " pleth_tables_loaded=" << s.pleth_tables_loaded.load() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact symmetric functions and algebraic random walks"};
    app.require_subcommand(1);

    int degree_cap_option = -1;
    std::string cache_dir_option;
    bool stats_option = false;
    app.add_option("--degree-cap", degree_cap_option, "truncation degree for the ring");
    app.add_option("--cache-dir", cache_dir_option, "directory with precomputed tables");
    app.add_flag("--stats", stats_option, "print instrumentation counters to stderr");

    // run
    auto* run = app.add_subcommand("run", "execute a walk config and write traces");
    std::string config_path, out_override;
    run->add_option("--config", config_path, "walk config JSON")->required();
    run->add_option("--out", out_override, "output directory (overrides the config)");

    // sf
    auto* sf = app.add_subcommand("sf", "symmetric function calculator");
    sf->require_subcommand(1);
    std::vector<std::string> exprs;
    std::string to_basis = "s";
    std::string kind = "outer";
    std::string side = "left";
    auto* mul = sf->add_subcommand("mul", "outer product");
    auto* inner = sf->add_subcommand("inner", "inner (Kronecker) product");
    auto* pleth = sf->add_subcommand("pleth", "plethysm A[B]");
    for (auto* cmd : {mul, inner, pleth}) {
        cmd->add_option("exprs", exprs, "two expressions")->expected(2);
        cmd->add_option("--to", to_basis, "output basis letter");
    }
    auto* skew = sf->add_subcommand("skew", "skew Schur function s_{la/mu}");
    skew->add_option("exprs", exprs, "two partitions, e.g. [2,1] [1]")->expected(2);
    skew->add_option("--to", to_basis, "output basis letter");
    auto* coproduct = sf->add_subcommand("coproduct", "coproduct into the tensor square");
    coproduct->add_option("--kind", kind, "outer | inner | pleth");
    coproduct->add_option("exprs", exprs, "one expression")->expected(1);
    auto* convert = sf->add_subcommand("convert", "rewrite in another basis");
    convert->add_option("--to", to_basis, "output basis letter")->required();
    convert->add_option("exprs", exprs, "one expression")->expected(1);
    auto* pair = sf->add_subcommand("pair", "Hall-pair against one tensor leg");
    pair->add_option("--kind", kind, "outer | inner | pleth");
    pair->add_option("--side", side, "left | right");
    pair->add_option("exprs", exprs, "phi and the target expression")->expected(2);
    pair->add_option("--to", to_basis, "output basis letter");

    // cache
    auto* cache = app.add_subcommand("cache", "coefficient cache management");
    auto* cache_build_cmd = cache->add_subcommand("build", "precompute tables to disk");
    int cache_degree = 0;
    std::string cache_dir_arg = "arw-cache";
    cache_build_cmd->add_option("--degree", cache_degree, "build degrees 0..N")->required();
    cache_build_cmd->add_option("--dir", cache_dir_arg, "target directory");

    // partition
    auto* partition = app.add_subcommand("partition", "integer partition utilities");
    partition->require_subcommand(1);
    std::string partition_arg;
    bool contents_flag = false;
    auto* conjugate = partition->add_subcommand("conjugate", "conjugate partition");
    conjugate->add_option("partition", partition_arg, "e.g. [4,2,2,1]")->required();
    auto* hooks = partition->add_subcommand("hooks", "hook lengths of the diagram");
    hooks->add_option("partition", partition_arg, "e.g. [4,2,2,1]")->required();
    hooks->add_flag("--contents", contents_flag, "print contents j - i instead");
    auto* zcmd = partition->add_subcommand("z", "centralizer order z_lambda");
    zcmd->add_option("partition", partition_arg, "e.g. [4,2,2,1]")->required();
    auto* enumerate = partition->add_subcommand("enumerate", "all partitions of n");
    int enumerate_n = 0;
    enumerate->add_option("n", enumerate_n, "weight")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (degree_cap_option >= 0) arw::set_degree_cap(degree_cap_option);
        if (!cache_dir_option.empty())
            arw::set_cache_dir(std::filesystem::path(cache_dir_option));

        const int cap = std::min(arw::degree_cap(), arw::kMaxDegreeCap);

        if (*run) {
            arw::WalkConfig config = arw::load_walk_config_file(config_path);
            std::vector<arw::TraceRecord> records = arw::run_walk(config);
            std::string out_dir = !out_override.empty() ? out_override
                                  : config.out_dir     ? *config.out_dir
                                                       : std::string("arw-out");
            arw::write_traces(records, out_dir);
            for (const auto& record : records) {
                std::cout << "step " << record.step << " " << record.kind
                          << " branches=" << record.branches;
                for (const auto& value : record.values)
                    std::cout << " " << value.expr << "=" << value.value.to_string();
                if (record.audit_violations >= 0)
                    std::cout << " audit_violations=" << record.audit_violations;
                std::cout << "\n";
            }
            std::cout << "wrote " << out_dir << "/trace.csv and " << out_dir
                      << "/trace.json\n";
        } else if (*sf) {
            arw::Basis target = parse_basis(to_basis);
            if (*mul || *inner || *pleth) {
                arw::SymFunc a = arw::parse_symfunc(exprs[0], cap);
                arw::SymFunc b = arw::parse_symfunc(exprs[1], cap);
                arw::SymFunc result = *mul     ? arw::outer_product(a, b)
                                      : *inner ? arw::inner_product(a, b)
                                               : arw::plethysm(a, b);
                std::cout << arw::format_symfunc(result.to_basis(target)) << "\n";
            } else if (*skew) {
                arw::Partition la = arw::Partition::from_string(exprs[0]);
                arw::Partition mu = arw::Partition::from_string(exprs[1]);
                std::cout << arw::format_symfunc(
                                 arw::skew_schur(la, mu, cap).to_basis(target))
                          << "\n";
            } else if (*coproduct || *pair) {
                arw::SymFunc f = arw::parse_symfunc(exprs.back(), cap);
                arw::Tensor2 t = kind == "outer"   ? arw::outer_coproduct(f)
                                 : kind == "inner" ? arw::inner_coproduct(f)
                                 : kind == "pleth"
                                     ? arw::plethysm_coproduct(f)
                                     : throw arw::DomainError("unknown coproduct kind");
                if (*coproduct) {
                    std::cout << arw::format_tensor(
                                     t.to_basis(arw::Basis::Schur, arw::Basis::Schur))
                              << "\n";
                } else {
                    arw::SymFunc phi = arw::parse_symfunc(exprs[0], cap);
                    arw::SymFunc result =
                        side == "left"    ? arw::pair_left(phi, t)
                        : side == "right" ? arw::pair_right(phi, t)
                                          : throw arw::DomainError("side must be left or right");
                    std::cout << arw::format_symfunc(result.to_basis(target)) << "\n";
                }
            } else if (*convert) {
                arw::SymFunc f = arw::parse_symfunc(exprs[0], cap);
                std::cout << arw::format_symfunc(f.to_basis(target)) << "\n";
            }
        } else if (*cache) {
            arw::cache_build(cache_dir_arg, cache_degree);
            std::cout << "wrote tables for degrees 0.." << cache_degree << " to "
                      << cache_dir_arg << "\n";
        } else if (*partition) {
            arw::Partition p;
            if (!*enumerate) p = arw::Partition::from_string(partition_arg);
            if (*conjugate) {
                std::cout << p.conjugate().to_string() << "\n";
            } else if (*hooks) {
                for (int r = 1; r <= p.length(); ++r) {
                    for (int c = 1; c <= p.parts()[r - 1]; ++c) {
                        if (c > 1) std::cout << ' ';
                        std::cout << (contents_flag ? p.content(r, c) : p.hook_length(r, c));
                    }
                    std::cout << "\n";
                }
            } else if (*zcmd) {
                std::cout << p.centralizer_order() << "\n";
            } else if (*enumerate) {
                for (const auto& la : arw::partitions_of(enumerate_n))
                    std::cout << la.to_string() << "\n";
            }
        }

        if (stats_option) print_stats();
        return 0;
    } catch (const arw::BranchCapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBranchCap;
    } catch (const arw::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const arw::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const arw::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
}
