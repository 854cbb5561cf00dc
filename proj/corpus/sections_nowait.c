int x;

void main()
{
#pragma omp parallel
    {
        int got;
#pragma omp sections nowait
        {
            { x = 1; }
#pragma omp section
            { x = 2; }
        }
        got = x;
    }
}
