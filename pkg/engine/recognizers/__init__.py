"""Package containing one-pass recognizers for classes with finite obstruction sets."""
