#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "spinblock/serialize.hpp"

using namespace spinblock;
using nlohmann::json;

namespace {

long long default_budget() {
  if (const char* env = std::getenv("SPINBLOCK_BUDGET")) {
    long long v = std::atoll(env);
    if (v > 0) return v;
  }
  return 2'000'000;
}

json envelope(const std::string& command) {
  json j;
  j["schema"] = kSchema;
  j["command"] = command;
  return j;
}

void emit(const json& j, const std::string& path) {
  if (path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream out(path);
    out << j.dump(2) << "\n";
  }
}

void emit_text(const std::string& s, const std::string& path) {
  if (path.empty()) {
    std::cout << s;
  } else {
    std::ofstream out(path);
    out << s;
  }
}

struct TupleArg {
  int p = 5;
  std::string tuple;
  std::string partition;

  CoreTuple resolve() const {
    if (!tuple.empty()) return parse_core_tuple(tuple, p);
    return core_tuple(parse_strict_partition(partition), p);
  }
};

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"spin block combinatorics: cores on the abacus, the block graph,\n"
               "runner-swap involutions, compatibility checks, rank bounds and the\n"
               "coordinate dictionary"};
  app.require_subcommand(1);
  std::function<void()> action;

  // core
  {
    auto* cmd = app.add_subcommand("core", "core, weight and invariants of a partition");
    auto p = std::make_shared<int>(5);
    auto parts = std::make_shared<std::string>();
    auto format = std::make_shared<std::string>("text");
    cmd->add_option("-p", *p, "odd prime modulus")->required();
    cmd->add_option("partition", *parts, "comma separated decreasing parts (may be empty)");
    cmd->add_option("--format", *format)->check(CLI::IsMember({"text", "json"}));
    cmd->callback([=, &action] {
      action = [=] {
        PStrictPartition lambda = parse_p_strict_partition(*parts, *p);
        CoreAndWeight cw = pbar_core(lambda);
        CoreTuple tuple = core_tuple(cw.core, *p);
        Content gamma = content(lambda);
        if (*format == "json") {
          json j = envelope("core");
          j["p"] = *p;
          j["input"] = lambda;
          j["core"] = cw.core;
          j["weight"] = cw.weight;
          j["core_tuple"] = tuple;
          j["parity"] = parity(cw.core);
          j["block_parity"] = block_parity(cw.core, cw.weight);
          j["content"] = gamma;
          j["abacus"] = to_abacus(lambda);
          emit(j, "");
        } else {
          std::cout << "core: " << to_string(cw.core) << "\n"
                    << "weight: " << cw.weight << "\n"
                    << "tuple: " << to_string(tuple) << "\n"
                    << "parity: " << parity(cw.core) << "\n"
                    << "block parity: " << block_parity(cw.core, cw.weight) << "\n"
                    << "content:";
          for (long long g : gamma.counts) std::cout << ' ' << g;
          std::cout << "\n";
        }
      };
    });
  }

  // strict
  {
    auto* cmd = app.add_subcommand("strict", "enumerate strict partitions of n");
    auto n = std::make_shared<int>(0);
    auto count_only = std::make_shared<bool>(false);
    auto format = std::make_shared<std::string>("text");
    cmd->add_option("-n", *n, "rank")->required();
    cmd->add_flag("--count-only", *count_only);
    cmd->add_option("--format", *format)->check(CLI::IsMember({"text", "json"}));
    cmd->callback([=, &action] {
      action = [=] {
        auto all = enumerate_strict(*n);
        if (*format == "json") {
          json j = envelope("strict");
          j["n"] = *n;
          j["count"] = all.size();
          if (!*count_only) j["partitions"] = all;
          emit(j, "");
        } else {
          std::cout << all.size() << "\n";
          if (!*count_only)
            for (const auto& lam : all) std::cout << to_string(lam) << "\n";
        }
      };
    });
  }

  // graph
  {
    auto* cmd = app.add_subcommand("graph", "block-reduced crystal graph up to a rank");
    auto p = std::make_shared<int>(5);
    auto max_rank = std::make_shared<int>(10);
    auto format = std::make_shared<std::string>("dot");
    auto budget = std::make_shared<long long>(default_budget());
    auto parallel = std::make_shared<bool>(false);
    auto out_path = std::make_shared<std::string>();
    cmd->add_option("-p", *p)->required();
    cmd->add_option("--max-rank", *max_rank)->required();
    cmd->add_option("--format", *format)->check(CLI::IsMember({"dot", "json"}));
    cmd->add_option("--budget", *budget);
    cmd->add_flag("--parallel", *parallel);
    cmd->add_option("-o,--output", *out_path, "write to a file instead of stdout");
    cmd->callback([=, &action] {
      action = [=] {
        BlockGraph g = block_reduced_graph(*p, *max_rank, *budget,
                                           *parallel ? Exec::Parallel : Exec::Serial);
        if (*format == "json") {
          json j = envelope("graph");
          j["graph"] = g;
          emit(j, *out_path);
        } else {
          emit_text(dot_of(g), *out_path);
        }
      };
    });
  }

  // string
  {
    auto* cmd = app.add_subcommand("string", "maximal residue string through a block");
    auto p = std::make_shared<int>(5);
    auto index = std::make_shared<int>(0);
    auto max_rank = std::make_shared<int>(10);
    auto core = std::make_shared<std::string>();
    auto w = std::make_shared<int>(0);
    auto budget = std::make_shared<long long>(default_budget());
    cmd->add_option("-p", *p)->required();
    cmd->add_option("-i", *index, "residue")->required();
    cmd->add_option("-w", *w, "weight")->required();
    cmd->add_option("--max-rank", *max_rank)->required();
    cmd->add_option("core", *core, "core partition");
    cmd->add_option("--budget", *budget);
    cmd->callback([=, &action] {
      action = [=] {
        BlockGraph g = block_reduced_graph(*p, *max_rank, *budget);
        StrictPartition c = parse_strict_partition(*core);
        if (!is_pbar_core(c, *p)) throw DomainError("not a core: " + to_string(c));
        IString s = maximal_i_string(BlockLabel{*p, c, *w}, *index, g);
        json j = envelope("string");
        j["p"] = *p;
        j["i"] = *index;
        j["blocks"] = s.blocks;
        j["upper_end_certain"] = s.upper_end_certain;
        emit(j, "");
      };
    });
  }

  // scopes
  {
    auto* cmd = app.add_subcommand("scopes", "apply a runner-swap involution");
    auto arg = std::make_shared<TupleArg>();
    auto index = std::make_shared<int>(0);
    auto format = std::make_shared<std::string>("text");
    cmd->add_option("-p", arg->p)->required();
    cmd->add_option("-i", *index, "involution index")->required();
    cmd->add_option("partition", arg->partition, "p-strict partition");
    cmd->add_option("--tuple", arg->tuple, "core tuple beads:side,...");
    cmd->add_option("--format", *format)->check(CLI::IsMember({"text", "json"}));
    cmd->callback([=, &action] {
      action = [=] {
        if (!arg->tuple.empty()) {
          CoreTuple in = parse_core_tuple(arg->tuple, arg->p);
          CoreTuple out = scopes_involution(*index, in);
          if (*format == "json") {
            json j = envelope("scopes");
            j["p"] = arg->p;
            j["i"] = *index;
            j["input"] = in;
            j["image"] = out;
            emit(j, "");
          } else {
            std::cout << to_string(out) << "\n";
          }
        } else {
          PStrictPartition in = parse_p_strict_partition(arg->partition, arg->p);
          PStrictPartition out = scopes_involution(*index, in);
          if (*format == "json") {
            json j = envelope("scopes");
            j["p"] = arg->p;
            j["i"] = *index;
            j["input"] = in;
            j["image"] = out;
            emit(j, "");
          } else {
            const auto& parts = out.parts();
            for (std::size_t k = 0; k < parts.size(); ++k)
              std::cout << (k ? "," : "") << parts[k];
            std::cout << "\n";
          }
        }
      };
    });
  }

  // allowed
  {
    auto* cmd = app.add_subcommand("allowed", "threshold test for one involution");
    auto arg = std::make_shared<TupleArg>();
    auto index = std::make_shared<int>(0);
    auto w = std::make_shared<int>(0);
    cmd->add_option("-p", arg->p)->required();
    cmd->add_option("-i", *index)->required();
    cmd->add_option("-w", *w)->required();
    cmd->add_option("--tuple", arg->tuple)->required();
    cmd->callback([=, &action] {
      action = [=] {
        CoreTuple c = arg->resolve();
        CoreTuple image = scopes_involution(*index, c);
        json j = envelope("allowed");
        j["p"] = arg->p;
        j["i"] = *index;
        j["w"] = *w;
        j["tuple"] = c;
        j["allowed"] = is_w_allowed(*index, c, *w);
        j["rank_change"] = rank_from_tuple(image) - rank_from_tuple(c);
        emit(j, "");
      };
    });
  }

  // component
  {
    auto* cmd = app.add_subcommand("component", "closure under allowed actions");
    auto arg = std::make_shared<TupleArg>();
    auto w = std::make_shared<int>(0);
    auto budget = std::make_shared<long long>(10'000);
    cmd->add_option("-p", arg->p)->required();
    cmd->add_option("-w", *w)->required();
    cmd->add_option("--tuple", arg->tuple)->required();
    cmd->add_option("--budget", *budget);
    cmd->callback([=, &action] {
      action = [=] {
        json j = envelope("component");
        j["p"] = arg->p;
        j["component"] = allowed_component(arg->resolve(), *w, *budget);
        emit(j, "");
      };
    });
  }

  // reduce
  {
    auto* cmd = app.add_subcommand("reduce", "drive a core to an irreducible one");
    auto arg = std::make_shared<TupleArg>();
    auto w = std::make_shared<int>(0);
    cmd->add_option("-p", arg->p)->required();
    cmd->add_option("-w", *w)->required();
    cmd->add_option("--tuple", arg->tuple)->required();
    cmd->callback([=, &action] {
      action = [=] {
        ReductionTrace trace = reduce_core(arg->resolve(), *w);
        json j = envelope("reduce");
        j["p"] = arg->p;
        j["w"] = *w;
        j["trace"] = trace;
        j["irreducible"] = true;
        emit(j, "");
      };
    });
  }

  // bound
  {
    auto* cmd = app.add_subcommand("bound", "sharp block-rank bound");
    auto p = std::make_shared<int>(5);
    auto w = std::make_shared<int>(1);
    auto format = std::make_shared<std::string>("text");
    cmd->add_option("-p", *p)->required();
    cmd->add_option("-w", *w)->required();
    cmd->add_option("--format", *format)->check(CLI::IsMember({"text", "json"}));
    cmd->callback([=, &action] {
      action = [=] {
        long long bound = donovan_bound(*p, *w);
        if (*format == "json") {
          json j = envelope("bound");
          j["p"] = *p;
          j["w"] = *w;
          j["bound"] = bound;
          emit(j, "");
        } else {
          std::cout << bound << "\n";
        }
      };
    });
  }

  // rock
  {
    auto* cmd = app.add_subcommand("rock", "maximal-rank irreducible core");
    auto p = std::make_shared<int>(5);
    auto w = std::make_shared<int>(1);
    cmd->add_option("-p", *p)->required();
    cmd->add_option("-w", *w)->required();
    cmd->callback([=, &action] {
      action = [=] {
        CoreTuple c = rock_core(*p, *w);
        json j = envelope("rock");
        j["p"] = *p;
        j["w"] = *w;
        j["tuple"] = c;
        j["core"] = core_from_tuple(c);
        j["rank"] = rank_from_tuple(c);
        j["level"] = level(coords_from_tuple(c));
        emit(j, "");
      };
    });
  }

  // enumerate
  {
    auto* cmd = app.add_subcommand("enumerate", "irreducible cores within the level bound");
    auto p = std::make_shared<int>(5);
    auto w = std::make_shared<int>(1);
    auto budget = std::make_shared<long long>(default_budget());
    auto parallel = std::make_shared<bool>(false);
    cmd->add_option("-p", *p)->required();
    cmd->add_option("-w", *w)->required();
    cmd->add_option("--budget", *budget);
    cmd->add_flag("--parallel", *parallel);
    cmd->callback([=, &action] {
      action = [=] {
        auto reps = enumerate_representatives(*p, *w, *budget,
                                              *parallel ? Exec::Parallel : Exec::Serial);
        json j = envelope("enumerate");
        j["p"] = *p;
        j["w"] = *w;
        j["count"] = reps.size();
        j["representatives"] = reps;
        emit(j, "");
      };
    });
  }

  // level-matrix
  {
    auto* cmd = app.add_subcommand("level-matrix", "levels over a coordinate box");
    auto p = std::make_shared<int>(5);
    auto lo = std::make_shared<int>(-4);
    auto hi = std::make_shared<int>(5);
    auto format = std::make_shared<std::string>("csv");
    auto budget = std::make_shared<long long>(default_budget());
    cmd->add_option("-p", *p)->required();
    cmd->add_option("--lo", *lo)->required();
    cmd->add_option("--hi", *hi)->required();
    cmd->add_option("--format", *format)->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--budget", *budget);
    cmd->callback([=, &action] {
      action = [=] {
        LevelTable table = level_table(*p, *lo, *hi, *budget);
        if (*format == "json") {
          json j = envelope("level-matrix");
          j["table"] = table;
          emit(j, "");
        } else {
          std::cout << csv_of(table);
        }
      };
    });
  }

  // cartan
  {
    auto* cmd = app.add_subcommand("cartan", "Cartan data of the twisted affine algebra");
    auto p = std::make_shared<int>(5);
    cmd->add_option("-p", *p)->required();
    cmd->callback([=, &action] {
      action = [=] {
        json j = envelope("cartan");
        j["p"] = *p;
        j["cartan"] = cartan_data(*p);
        emit(j, "");
      };
    });
  }

  // paths
  {
    auto* cmd = app.add_subcommand("paths", "count box-removal paths between strict partitions");
    auto source = std::make_shared<std::string>();
    auto target = std::make_shared<std::string>();
    cmd->add_option("source", *source)->required();
    cmd->add_option("target", *target, "may be empty");
    cmd->callback([=, &action] {
      action = [=] {
        StrictPartition from = parse_strict_partition(*source);
        StrictPartition to = parse_strict_partition(*target);
        json j = envelope("paths");
        j["source"] = from;
        j["target"] = to;
        j["alpha"] = from.rank() - to.rank();
        j["count"] = count_paths(from, to);
        emit(j, "");
      };
    });
  }

  // verify-compat
  {
    auto* cmd = app.add_subcommand("verify-compat", "brute-force compatibility check");
    auto arg = std::make_shared<TupleArg>();
    auto index = std::make_shared<int>(0);
    auto w = std::make_shared<int>(0);
    auto budget = std::make_shared<long long>(default_budget());
    auto parallel = std::make_shared<bool>(false);
    auto timing = std::make_shared<bool>(false);
    cmd->add_option("-p", arg->p)->required();
    cmd->add_option("-i", *index)->required();
    cmd->add_option("-w", *w)->required();
    cmd->add_option("core", arg->partition, "core partition");
    cmd->add_option("--tuple", arg->tuple);
    cmd->add_option("--budget", *budget);
    cmd->add_flag("--parallel", *parallel);
    cmd->add_flag("--timing", *timing, "include wall-clock milliseconds");
    cmd->callback([=, &action] {
      action = [=] {
        StrictPartition nu = arg->tuple.empty()
                                 ? parse_strict_partition(arg->partition)
                                 : core_from_tuple(parse_core_tuple(arg->tuple, arg->p));
        CompatibilityReport rep = verify_w_compatible(
            nu, *index, *w, arg->p, *budget, *parallel ? Exec::Parallel : Exec::Serial);
        json j = envelope("verify-compat");
        j["p"] = arg->p;
        j["report"] = rep;
        if (*timing)
          j["elapsed_ms"] = static_cast<long long>(rep.elapsed_seconds * 1000.0);
        emit(j, "");
      };
    });
  }

  try {
    app.parse(argc, argv);
    action();
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const BudgetError& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    return 3;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
