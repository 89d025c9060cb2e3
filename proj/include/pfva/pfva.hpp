// Umbrella header for the pfva library.
#pragma once

#include <pfva/config.hpp>
#include <pfva/coupling.hpp>
#include <pfva/csv.hpp>
#include <pfva/dynamics.hpp>
#include <pfva/errors.hpp>
#include <pfva/gear_train.hpp>
#include <pfva/mechanism.hpp>
#include <pfva/simulation.hpp>
#include <pfva/trajectory.hpp>
