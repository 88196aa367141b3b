#include <cstdio>

#include "CLI11.hpp"
#include "dyadic/field.hpp"

int main(int argc, char** argv) {
  CLI::App app{"dyadic: arithmetic over residual-characteristic-2 local fields"};
  std::string field_cfg = "q2";
  app.add_option("--field", field_cfg, "field config or preset");
  auto* fld = app.add_subcommand("field", "describe the configured field");
  CLI11_PARSE(app, argc, argv);
  if (fld->parsed()) {
    auto F = dyadic::FieldSpec::parse(field_cfg);
    std::printf("%s\n", F->describe().c_str());
  }
  return 0;
}
