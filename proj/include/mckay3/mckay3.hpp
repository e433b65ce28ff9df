#pragma once

#include "error.hpp"
#include "cyclo.hpp"
#include "modp.hpp"
#include "group.hpp"
#include "chartab.hpp"
#include "quiver.hpp"
#include "cutsolve.hpp"
#include "typea.hpp"
#include "catalog.hpp"
#include "io.hpp"
#include "pipeline.hpp"
