#pragma once

#include "mesa/dyck.hpp"
#include "mesa/enumeration.hpp"
#include "mesa/error.hpp"
#include "mesa/exact.hpp"
#include "mesa/mesa_sets.hpp"
#include "mesa/parse.hpp"
#include "mesa/render.hpp"
#include "mesa/report_io.hpp"
#include "mesa/set.hpp"
#include "mesa/stirling.hpp"
