class Sample
{
    int extremelyLongFieldNameThatJustKeepsGoingXXXXXXXXXXXXXXXXXXXXXXXXXXXXXXXXXXXXXXXXXXXXXXXXXXXXXXXXXXXX = 1;
}
