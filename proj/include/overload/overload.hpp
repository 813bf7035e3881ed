#ifndef OVERLOAD_OVERLOAD_HPP
#define OVERLOAD_OVERLOAD_HPP

#include "overload/awareness.hpp"
#include "overload/choice.hpp"
#include "overload/commands.hpp"
#include "overload/equilibrium.hpp"
#include "overload/errors.hpp"
#include "overload/knowledge_choice.hpp"
#include "overload/numerics.hpp"
#include "overload/report.hpp"
#include "overload/scenario.hpp"
#include "overload/selftest.hpp"
#include "overload/trajectory.hpp"

#endif
