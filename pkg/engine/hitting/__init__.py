"""Package containing the one-pass solver of vertex deletion to classes with finite obstruction sets."""
