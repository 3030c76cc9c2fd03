class NoTrailingNewline
{
    int x = 1;
}