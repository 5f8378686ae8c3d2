#pragma once

#include "argon/arg_set.hpp"
#include "argon/correspondence.hpp"
#include "argon/error.hpp"
#include "argon/extensions.hpp"
#include "argon/framework.hpp"
#include "argon/io/parse.hpp"
#include "argon/io/serialize.hpp"
#include "argon/labelling.hpp"
#include "argon/labellings.hpp"
#include "argon/meta/enumerate.hpp"
#include "argon/meta/property.hpp"
#include "argon/meta/registry.hpp"
#include "argon/orders.hpp"
#include "argon/parallel.hpp"
#include "argon/semantics.hpp"
