void main()
{
    int x;

#pragma omp parallel
    {

#pragma omp sections
    {
        { x = 1; }
#pragma omp section
        { x = 2; }
    }
    }
}
