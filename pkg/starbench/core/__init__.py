"""starbench core: 3-graphs, matchings, stars, exact searches, colorings and audits."""
