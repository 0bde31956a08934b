# Domain services: numerics, model, Floquet, perturbation, RWA and dissipation.
