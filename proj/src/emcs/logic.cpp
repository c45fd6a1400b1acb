#include "emcs/logic.hpp"

#include "emcs/errors.hpp"
#include "emcs/logics/datalog.hpp"
#include "emcs/logics/el.hpp"
#include "emcs/logics/normal_lp.hpp"
#include "emcs/logics/observation.hpp"

namespace emcs {

std::shared_ptr<const ContextLogic> make_logic(std::string_view kind) {
  static const auto observation = std::make_shared<const ObservationLogic>();
  static const auto datalog = std::make_shared<const DatalogLogic>();
  static const auto normal_lp = std::make_shared<const NormalLpLogic>();
  static const auto el = std::make_shared<const ElLogic>();
  if (kind == "observation") return observation;
  if (kind == "datalog") return datalog;
  if (kind == "normal-lp") return normal_lp;
  if (kind == "el") return el;
  throw ValidationError("unknown logic kind '" + std::string(kind) + "'");
}

}  // namespace emcs
